#pragma once

#include "richlines/design_matrix.hpp"
#include "richlines/line.hpp"
#include "richlines/pipeline.hpp"
#include "richlines/point_set.hpp"
#include "richlines/polynomial.hpp"
#include "richlines/refinement.hpp"
#include "richlines/vanishing.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace richlines {

using Json = nlohmann::ordered_json;

/// Thrown for malformed input documents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Scalar& s);
Json to_json(const mpq_class& q);
Json to_json(const Vec& v);
Scalar scalar_from_json(const Json& j);
Vec vec_from_json(const Json& j);

/// {"dim": d, "field": "Q"|"Qi", "points": [["p/q", ...], ...]}
Json to_json(const PointSet& V);
PointSet point_set_from_json(const Json& j);

/// {"dir": [...], "base": [...], "points": [indices]}
Json to_json(const Line& line);
Line line_from_json(const Json& j);
Json to_json(const std::vector<Line>& lines);
std::vector<Line> lines_from_json(const Json& j);

/// {"dim": d, "terms": [{"exp": [...], "coef": "p/q"}]}, terms in graded-lex order.
Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

/// Sparse triplets [row, col, "value"] with the measured (q, k, t) and the tuples.
Json to_json(const DesignMatrix& A);
Json to_json(const DesignParameters& p);
Json to_json(const Hyperplane& h);
Json to_json(const RefinementResult& R);
Json to_json(const LemmaCertificate& c);
Json to_json(const PipelineTrace& t);

/// Decimal rendering with `digits` significant digits (for CSV only).
std::string decimal(const mpq_class& q, int digits = 12);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace richlines
