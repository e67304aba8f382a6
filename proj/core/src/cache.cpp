#include "affsym/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace affsym {

std::string grassmannian_cache_filename(Family f, int n, int max_length) {
  return std::string("grassmannian_") + family_char(f) + "_" + std::to_string(n) + "_" +
         std::to_string(max_length) + ".words";
}

void save_grassmannian_cache(const std::string& path, WeylGroup& W, int max_length,
                             const std::vector<std::vector<ElemId>>& levels) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << family_char(W.cartan().family) << ' ' << W.rank() << ' ' << max_length << '\n';
  for (auto& level : levels)
    for (ElemId w : level) {
      const Word& word = W.canonical_word(w);
      for (size_t i = 0; i < word.size(); ++i) {
        if (i) out << ' ';
        out << word[i];
      }
      out << '\n';
    }
}

std::optional<std::vector<std::vector<Word>>> load_grassmannian_cache(const std::string& path,
                                                                      Family f, int n,
                                                                      int max_length) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::istringstream hs(header);
  std::string fam;
  int hn = 0, hl = 0;
  if (!(hs >> fam >> hn >> hl)) return std::nullopt;
  if (fam != std::string(1, family_char(f)) || hn != n || hl != max_length) return std::nullopt;

  std::vector<std::vector<Word>> levels(max_length + 1);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Word w;
    int x;
    while (ls >> x) w.push_back(x);
    if ((int)w.size() > max_length) return std::nullopt;
    levels[w.size()].push_back(std::move(w));
  }
  return levels;
}

std::vector<std::vector<ElemId>> grassmannian_elements_cached(WeylGroup& W, int max_length,
                                                              const std::string& cache_dir) {
  if (cache_dir.empty()) return W.grassmannian_elements(max_length);
  std::filesystem::create_directories(cache_dir);
  std::string path = cache_dir + "/" +
                     grassmannian_cache_filename(W.cartan().family, W.rank(), max_length);
  if (auto words = load_grassmannian_cache(path, W.cartan().family, W.rank(), max_length)) {
    std::vector<std::vector<ElemId>> levels(max_length + 1);
    for (int l = 0; l <= max_length; ++l)
      for (auto& w : (*words)[l]) {
        ElemId e = W.from_word(w);
        if (W.length(e) != l) throw std::runtime_error("corrupt cache file " + path);
        levels[l].push_back(e);
      }
    return levels;
  }
  auto levels = W.grassmannian_elements(max_length);
  save_grassmannian_cache(path, W, max_length, levels);
  return levels;
}

}  // namespace affsym
