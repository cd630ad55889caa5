#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uor {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

using TokenId = std::int32_t;
using Sentence = std::vector<TokenId>;

// Raised for every contract violation in the library. Messages name the
// offending token, class, index or path.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace uor
