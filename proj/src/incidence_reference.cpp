// Serial reference implementations kept for differential testing and the
// serial-vs-parallel benchmark.

#include "richlines/incidence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace richlines::reference {

std::vector<Line> rich_lines(const PointSet& V, std::size_t r) {
    if (r < 2) throw std::invalid_argument("rich_lines needs r >= 2");
    std::unordered_map<Line, std::set<std::size_t>, LineKeyHash> by_line;
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = i + 1; j < V.size(); ++j) {
            auto& members = by_line[canonical_line(V[i], V[j])];
            members.insert(i);
            members.insert(j);
        }

    std::vector<Line> out;
    for (auto& [key, members] : by_line) {
        if (members.size() < r) continue;
        Line line = key;
        line.incident.assign(members.begin(), members.end());
        out.push_back(std::move(line));
    }
    std::sort(out.begin(), out.end(), [](const Line& a, const Line& b) { return a.incident < b.incident; });
    return out;
}

APCount count_aps(const PointSet& V, std::size_t r, bool keep_records) {
    if (r < 2) throw std::invalid_argument("count_aps needs r >= 2");
    APCount result;
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = 0; j < V.size(); ++j) {
            if (i == j) continue;
            const Vec diff = V[j] - V[i];
            if (!is_sign_canonical(diff)) continue;
            APRecord rec{V[i], diff, r, {i, j}};
            bool complete = true;
            for (std::size_t step = 2; step < r && complete; ++step) {
                auto idx = V.index_of(rec.term(step));
                if (idx)
                    rec.members.push_back(*idx);
                else
                    complete = false;
            }
            if (!complete) continue;
            ++result.count;
            if (keep_records) result.progressions.push_back(std::move(rec));
        }
    std::sort(result.progressions.begin(), result.progressions.end(),
              [](const APRecord& a, const APRecord& b) { return a.members < b.members; });
    return result;
}

}  // namespace richlines::reference
