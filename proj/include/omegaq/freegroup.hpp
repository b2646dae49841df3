#pragma once

#include <string>
#include <vector>

namespace omegaq {

// Word in the free group on x1, x2, ...: letter k > 0 is x_k, -k its inverse.
using Word = std::vector<int>;

Word reduce(Word w);
Word fg_mul(const Word &a, const Word &b);
Word fg_inv(const Word &a);
// "x1 x2^-1", "1" for the empty word
std::string print_word(const Word &w);

} // namespace omegaq
