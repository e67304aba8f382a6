#pragma once

#include <optional>
#include <string>

#include "affsym/weyl.hpp"

namespace affsym {

// On-disk cache of graded Grassmannian element lists.  Format: header line
// "family n max_length", then one canonical word per line with letters
// space-separated (the identity is an empty line); the level of a word is its
// length.
std::string grassmannian_cache_filename(Family f, int n, int max_length);

void save_grassmannian_cache(const std::string& path, WeylGroup& W, int max_length,
                             const std::vector<std::vector<ElemId>>& levels);

std::optional<std::vector<std::vector<Word>>> load_grassmannian_cache(const std::string& path,
                                                                      Family f, int n,
                                                                      int max_length);

// compute through the cache directory when one is given (empty = no cache)
std::vector<std::vector<ElemId>> grassmannian_elements_cached(WeylGroup& W, int max_length,
                                                              const std::string& cache_dir);

}  // namespace affsym
