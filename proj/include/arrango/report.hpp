#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrango/coxeter.hpp"

namespace arrango {

/// "(1, cos(1,8), 0)"
std::string format_covector(const Covector &v);
/// "{{2^3, 3^4, 4^1}}"
std::string format_multiset(const std::map<std::size_t, std::size_t> &m);
/// Rows separated by "; ", e.g. "[2 -1; -1 2]".
std::string format_matrix(const IntMatrix &m);
std::string format_matrix(const Matrix &m);
/// Hyperplane indices, 1-based: "{1, 4, 7}".
std::string format_set(const IndexSet &s);

}  // namespace arrango
