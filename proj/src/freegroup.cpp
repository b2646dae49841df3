#include "omegaq/freegroup.hpp"

namespace omegaq {

Word reduce(Word w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word fg_mul(const Word &a, const Word &b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(std::move(w));
}

Word fg_inv(const Word &a) {
  Word w(a.rbegin(), a.rend());
  for (int &x : w)
    x = -x;
  return w;
}

std::string print_word(const Word &w) {
  if (w.empty())
    return "1";
  std::string s;
  for (int x : w) {
    if (!s.empty())
      s += ' ';
    s += "x" + std::to_string(x > 0 ? x : -x);
    if (x < 0)
      s += "^-1";
  }
  return s;
}

} // namespace omegaq
