#include "orbipres/words.hpp"

#include <sstream>
#include <stdexcept>

namespace orbipres {

Word reduced(Word w) {
  Word out;
  for (const auto& l : w) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("word: exponent must be +-1");
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return reduced(std::move(w));
}

Word power(const Word& u, int e) {
  Word out;
  Word base = e >= 0 ? u : inverse(u);
  for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduced(std::move(out));
}

Word alternating(int x, int y, int terms) {
  Word out;
  for (int i = 0; i < terms; ++i) out.push_back({i % 2 == 0 ? x : y, 1});
  return out;
}

Word GeneratorMap::apply(const Word& w) const {
  Word out;
  for (const auto& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw std::invalid_argument("map: generator has no image");
    Word img = l.exp == 1 ? it->second : inverse(it->second);
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduced(std::move(out));
}

GeneratorMap GeneratorMap::after(const GeneratorMap& first) const {
  GeneratorMap out;
  for (const auto& [g, img] : first.images) out.images[g] = apply(img);
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += names.at(l.gen);
    if (l.exp == -1) out += "^-1";
  }
  return out;
}

Word word_from_string(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    if (auto p = tok.find('^'); p != std::string::npos) {
      std::string e = tok.substr(p + 1);
      if (e != "-1" && e != "1") throw std::invalid_argument("word: exponent must be +-1");
      if (e == "-1") exp = -1;
      tok = tok.substr(0, p);
    }
    int gen = -1;
    for (int i = 0; i < (int)names.size(); ++i)
      if (names[i] == tok) gen = i;
    if (gen < 0) throw std::invalid_argument("word: unknown generator " + tok);
    w.push_back({gen, exp});
  }
  return reduced(std::move(w));
}

}  // namespace orbipres
