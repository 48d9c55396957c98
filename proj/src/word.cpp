#include "fkb/word.hpp"

#include <sstream>
#include <stdexcept>

namespace fkb {

FreeKBraidWord::FreeKBraidWord(int n_, int k_, std::vector<KSubset> letters_)
    : n(n_), k(k_), letters(std::move(letters_)) {
  if (k < 1 || k > n) throw std::invalid_argument("FreeKBraidWord: need 1 <= k <= n");
  for (const auto& m : letters) {
    if (m.n != n || m.k() != k)
      throw std::invalid_argument("FreeKBraidWord: letter has mismatched (n, k)");
  }
}

void FreeKBraidWord::push(const KSubset& m) {
  if (m.n != n || m.k() != k)
    throw std::invalid_argument("FreeKBraidWord: letter has mismatched (n, k)");
  letters.push_back(m);
}

FreeKBraidWord FreeKBraidWord::concat(const FreeKBraidWord& other) const {
  if (other.n != n || other.k != k)
    throw std::invalid_argument("concat: mismatched (n, k)");
  FreeKBraidWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

std::vector<int> FreeKBraidWord::encode() const {
  std::vector<int> code;
  code.reserve(letters.size());
  for (const auto& m : letters) code.push_back(m.rank());
  return code;
}

bool FreeKBraidWord::operator==(const FreeKBraidWord& o) const {
  return n == o.n && k == o.k && letters == o.letters;
}

std::string FreeKBraidWord::str() const {
  if (letters.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += letters[i].str();
  }
  return s;
}

FreeKBraidWord free_reduce(const FreeKBraidWord& w) {
  FreeKBraidWord out(w.n, w.k);
  for (const auto& m : w.letters) {
    if (!out.letters.empty() && out.letters.back() == m)
      out.letters.pop_back();
    else
      out.letters.push_back(m);
  }
  return out;
}

FreeKBraidWord free_reduce_path(const FreeKBraidWord& w,
                                std::vector<FreeKBraidWord>* path) {
  FreeKBraidWord cur = w;
  if (path) path->push_back(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < cur.letters.size(); ++i) {
      if (cur.letters[i] == cur.letters[i + 1]) {
        cur.letters.erase(cur.letters.begin() + i, cur.letters.begin() + i + 2);
        if (path) path->push_back(cur);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

ParityVector parity_vector(const FreeKBraidWord& w) {
  ParityVector p(static_cast<size_t>(binomial(w.n, w.k)), 0);
  for (const auto& m : w.letters) p[m.rank()] ^= 1;
  return p;
}

namespace {

KSubset parse_letter(const std::string& tok, int n, int k, size_t pos) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("word syntax error at token " + std::to_string(pos) +
                                " ('" + tok + "'): " + why);
  };
  if (tok.size() < 4 || tok[0] != 'a' || tok[1] != '{' || tok.back() != '}')
    fail("expected a{i1,...,ik}");
  std::vector<int> elems;
  std::string body = tok.substr(2, tok.size() - 3);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail("bad index '" + item + "'");
      return {};
    }
    if (used != item.size()) fail("bad index '" + item + "'");
    elems.push_back(v);
  }
  if (static_cast<int>(elems.size()) != k)
    fail("expected " + std::to_string(k) + " indices");
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n) fail("index out of range 1..n");
    if (i > 0 && elems[i] <= elems[i - 1])
      fail("indices must be strictly increasing");
  }
  return KSubset(n, elems);
}

}  // namespace

FreeKBraidWord parse_word(const std::string& text, int n, int k) {
  FreeKBraidWord w(n, k);
  std::stringstream ss(text);
  std::string tok;
  std::vector<std::string> toks;
  while (ss >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "e") return w;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "e")
      throw std::invalid_argument("word syntax error at token " + std::to_string(i) +
                                  ": 'e' may only appear alone");
    w.letters.push_back(parse_letter(toks[i], n, k, i));
  }
  return w;
}

FreeKBraidWord parse_word_file(const std::string& text) {
  std::stringstream ss(text);
  std::string ntok, ktok;
  if (!(ss >> ntok >> ktok) || ntok.rfind("n=", 0) != 0 || ktok.rfind("k=", 0) != 0)
    throw std::invalid_argument("expected header 'n=<int> k=<int>'");
  int n = std::stoi(ntok.substr(2));
  int k = std::stoi(ktok.substr(2));
  std::string rest;
  std::getline(ss, rest);
  std::string more;
  while (std::getline(ss, more)) rest += " " + more;
  if (rest.find_first_not_of(" \t\r\n") == std::string::npos) rest = "e";
  return parse_word(rest, n, k);
}

}  // namespace fkb
