#ifndef GIBBSNUM_SPECIO_HPP
#define GIBBSNUM_SPECIO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "gibbsnum/matmeasure.hpp"

namespace gibbsnum {

// File format: rationals as "num/den" strings, matrices row-major:
// {"dim": 2, "L": ["1/2","1/2"], "V": ["1","1"],
//  "matrices": [[["1/4","0"],["1/4","1/4"]], ...]}
MatrixMeasureSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const MatrixMeasureSpec& spec);

MatrixMeasureSpec load_spec_file(const std::string& path);

// "1/3,1/3,1/3" -> rationals (decimal entries allowed)
std::vector<Rational> parse_rational_list(const std::string& text);
// "1/2,1/2;1/3,2/3" -> square matrix, rows separated by ';'
RatMatrix parse_rational_matrix(const std::string& text);

}  // namespace gibbsnum

#endif
