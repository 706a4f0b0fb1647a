#pragma once

#include <map>
#include <string>
#include <vector>

namespace orbipres {

// letter = generator id with exponent +1/-1
struct Letter {
  int gen = 0;
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word reduced(Word w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);  // reduced
Word power(const Word& u, int e);
// x y x y ... , `terms` letters
Word alternating(int x, int y, int terms);

// generator -> image word, applied letter by letter
struct GeneratorMap {
  std::map<int, Word> images;
  Word apply(const Word& w) const;
  GeneratorMap after(const GeneratorMap& first) const;  // this o first
};

// token grammar: s3, s3^-1, whitespace separated; names come from a table
std::string word_to_string(const Word& w, const std::vector<std::string>& names);
Word word_from_string(const std::string& text, const std::vector<std::string>& names);

}  // namespace orbipres
