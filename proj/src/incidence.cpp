#include "richlines/incidence.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace richlines {

Point APRecord::term(std::size_t j) const {
    Point p(start);
    const Scalar step = static_cast<long>(j);
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!diff[k].is_zero()) p[k] += step * diff[k];
    return p;
}

namespace {

void sort_lines(std::vector<Line>& lines) {
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.incident < b.incident; });
}

void sort_records(std::vector<APRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const APRecord& a, const APRecord& b) { return a.members < b.members; });
}

}  // namespace

std::vector<Line> rich_lines(const PointSet& V, std::size_t r) {
    if (r < 2) throw std::invalid_argument("rich_lines needs r >= 2");
    const std::size_t n = V.size();
    std::vector<Line> found;
    if (n < r) return found;

#pragma omp parallel
    {
        std::vector<Line> local;
        std::unordered_map<Vec, std::vector<std::size_t>, VecHash> groups;
#pragma omp for schedule(dynamic, 4)
        for (std::size_t i = 0; i < n; ++i) {
            groups.clear();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                groups[pivot_normalized(V[j] - V[i])].push_back(j);
            }
            for (auto& [dir, members] : groups) {
                // Only the lowest-indexed member reports the line; members are ascending.
                if (members.size() + 1 < r || members.front() < i) continue;
                Line line = line_through(V[i], dir);
                line.incident.reserve(members.size() + 1);
                line.incident.push_back(i);
                line.incident.insert(line.incident.end(), members.begin(), members.end());
                local.push_back(std::move(line));
            }
        }
#pragma omp critical(richlines_merge)
        {
            for (auto& l : local) found.push_back(std::move(l));
        }
    }
    sort_lines(found);
    return found;
}

IncidenceGraph incidences(const PointSet& V, const std::vector<Line>& lines) {
    IncidenceGraph g;
    g.left.resize(V.size());
    for (std::size_t i = 0; i < V.size(); ++i) g.left[i] = i;
    g.right.resize(lines.size());
    for (std::size_t l = 0; l < lines.size(); ++l) {
        g.right[l] = l;
        for (auto idx : lines[l].incident) {
            if (idx >= V.size()) throw std::invalid_argument("line references a point index out of range");
            if (!lines[l].contains(V[idx]))
                throw std::invalid_argument("point " + std::to_string(idx) + " is not on line " + std::to_string(l));
            g.edges.emplace_back(idx, l);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

APCount count_aps(const PointSet& V, std::size_t r, bool keep_records) {
    if (r < 2) throw std::invalid_argument("count_aps needs r >= 2");
    const std::size_t n = V.size();
    APCount result;
    std::size_t total = 0;

#pragma omp parallel reduction(+ : total)
    {
        std::vector<APRecord> local;
#pragma omp for schedule(dynamic, 4)
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Vec diff = V[j] - V[i];
                if (!is_sign_canonical(diff)) continue;
                std::vector<std::size_t> members{i, j};
                Point next = V[j];
                bool complete = true;
                for (std::size_t step = 2; step < r; ++step) {
                    next = next + diff;
                    auto idx = V.index_of(next);
                    if (!idx) {
                        complete = false;
                        break;
                    }
                    members.push_back(*idx);
                }
                if (!complete) continue;
                ++total;
                if (keep_records) local.push_back(APRecord{V[i], std::move(diff), r, std::move(members)});
            }
        }
        if (keep_records) {
#pragma omp critical(richlines_ap_merge)
            {
                for (auto& rec : local) result.progressions.push_back(std::move(rec));
            }
        }
    }
    result.count = total;
    sort_records(result.progressions);
    return result;
}

std::vector<std::size_t> line_degrees(std::size_t n, const std::vector<Line>& lines) {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& l : lines)
        for (auto idx : l.incident) ++deg.at(idx);
    return deg;
}

PointSet progression_lift(const PointSet& V, std::size_t r) {
    check_size_cap(r * V.size(), size_cap(), "progression_lift");
    PointSet out(V.dim() + 1);
    for (std::size_t i = 0; i < r; ++i)
        for (const auto& v : V) {
            Point p;
            p.reserve(V.dim() + 1);
            p.push_back(static_cast<long>(i));
            p.insert(p.end(), v.begin(), v.end());
            out.add(std::move(p));
        }
    return out;
}

Line lift_progression(const APRecord& ap, const PointSet& lifted, std::size_t base_count) {
    Point origin;
    origin.push_back(0);
    origin.insert(origin.end(), ap.start.begin(), ap.start.end());
    Vec dir;
    dir.push_back(1);
    dir.insert(dir.end(), ap.diff.begin(), ap.diff.end());
    Line line = line_through(origin, dir);
    for (std::size_t j = 0; j < ap.members.size(); ++j) line.incident.push_back(j * base_count + ap.members[j]);
    std::sort(line.incident.begin(), line.incident.end());
    for (auto idx : line.incident)
        if (idx >= lifted.size() || !line.contains(lifted[idx]))
            throw std::logic_error("lifted progression line misses its own points");
    return line;
}

}  // namespace richlines
