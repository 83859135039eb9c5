#include "flowers/symbolic.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace flowers {

Word::Word(std::vector<Symbol> symbols, int alphabet) : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (alphabet_ < 2 || alphabet_ > 36) throw ValidationError("alphabet size must be in [2, 36]");
  if (symbols_.empty()) throw ValidationError("words must be non-empty");
  for (const Symbol s : symbols_) {
    if (s >= alphabet_) {
      throw ValidationError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(alphabet_));
    }
  }
}

Word Word::parse(std::string_view digits, int alphabet) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (const char c : digits) {
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
    if (v < 0) throw ValidationError("invalid symbol '" + std::string(1, c) + "' in word");
    symbols.push_back(static_cast<Symbol>(v));
  }
  return Word(std::move(symbols), alphabet);
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (const Symbol s : symbols_) out.push_back(static_cast<char>(s < 10 ? '0' + s : 'a' + (s - 10)));
  return out;
}

Integer Word::as_integer() const {
  Integer v = 0;
  for (const Symbol s : symbols_) v = v * alphabet_ + s;
  return v;
}

Word Word::rotated(std::size_t k) const {
  std::vector<Symbol> out(symbols_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return Word(std::move(out), alphabet_);
}

std::size_t Word::primitive_period() const {
  const std::size_t n = symbols_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = symbols_[i] == symbols_[i - p];
    if (periodic) return p;
  }
  return n;
}

Word Word::least_rotation() const {
  Word best = *this;
  for (std::size_t k = 1; k < size(); ++k) {
    Word r = rotated(k);
    if (r < best) best = std::move(r);
  }
  return best;
}

bool Word::is_lyndon() const {
  if (!is_primitive()) return false;
  for (std::size_t k = 1; k < size(); ++k) {
    if (!(*this < rotated(k))) return false;
  }
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

SymbolicOrbitSet::SymbolicOrbitSet(std::vector<Word> words, int alphabet) : alphabet_(alphabet) {
  for (const Word& w : words) {
    if (w.alphabet() != alphabet) throw ValidationError("generator alphabet mismatch");
    const std::size_t p = w.primitive_period();
    const Word root(std::vector<Word::Symbol>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)), alphabet);
    Word canon = root.least_rotation();
    if (std::find(generators_.begin(), generators_.end(), canon) == generators_.end()) {
      generators_.push_back(std::move(canon));
    }
  }
  std::sort(generators_.begin(), generators_.end(), shortlex_less);
}

SymbolicOrbitSet::SymbolicOrbitSet(std::initializer_list<std::string_view> words, int alphabet)
    : SymbolicOrbitSet(
          [&] {
            std::vector<Word> ws;
            for (const auto w : words) ws.push_back(Word::parse(w, alphabet));
            return ws;
          }(),
          alphabet) {}

std::vector<Word> enumerate_lyndon(int d, int max_len) {
  if (d < 2) throw ValidationError("enumerate_lyndon needs d >= 2");
  if (max_len < 1) throw ValidationError("enumerate_lyndon needs max_len >= 1");
  // Duval's generator: visits every Lyndon word of length <= max_len once,
  // in lexicographic order.
  std::vector<Word> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    out.emplace_back(std::vector<Word::Symbol>(w.begin(), w.end()), d);
    const std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(max_len)) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == d - 1) w.pop_back();
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

Integer lyndon_count(int d, int n) {
  auto moebius = [](int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
      if (k % p == 0) {
        k /= p;
        if (k % p == 0) return 0;
        result = -result;
      }
    }
    if (k > 1) result = -result;
    return result;
  };
  Integer sum = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    sum += moebius(k) * ipow(d, static_cast<unsigned>(n / k));
  }
  return sum / n;
}

Word coding(const CirclePoint& x, int d, int n) {
  if (d < 2) throw ValidationError("coding needs d >= 2");
  if (n < 1) throw ValidationError("coding needs n >= 1");
  std::vector<Word::Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(n));
  // x = num/den; the itinerary digits are those of the base-d expansion.
  Integer num = x.value().numerator();
  const Integer den = x.value().denominator();
  for (int i = 0; i < n; ++i) {
    num *= d;
    Integer digit;
    mpz_fdiv_qr(digit.get_mpz_t(), num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    symbols.push_back(static_cast<Word::Symbol>(digit.get_ui()));
  }
  return Word(std::move(symbols), d);
}

std::size_t word_complexity(const SymbolicOrbitSet& set, int n) {
  if (n < 1) throw ValidationError("complexity needs n >= 1");
  std::unordered_set<std::string> factors;
  std::string buf(static_cast<std::size_t>(n), '\0');
  for (const Word& w : set.generators()) {
    const std::size_t p = w.size();
    for (std::size_t start = 0; start < p; ++start) {
      for (std::size_t j = 0; j < buf.size(); ++j) buf[j] = static_cast<char>(w[(start + j) % p]);
      factors.insert(buf);
    }
  }
  return factors.size();
}

std::size_t factor_complexity(std::span<const Word> words, int n) {
  if (n < 1) throw ValidationError("complexity needs n >= 1");
  std::unordered_set<std::string> factors;
  const auto len = static_cast<std::size_t>(n);
  for (const Word& w : words) {
    if (w.size() < len) continue;
    const auto syms = w.symbols();
    for (std::size_t start = 0; start + len <= w.size(); ++start) {
      factors.emplace(reinterpret_cast<const char*>(syms.data() + start), len);
    }
  }
  return factors.size();
}

bool is_sturmian_complexity(const SymbolicOrbitSet& set, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    if (word_complexity(set, n) > static_cast<std::size_t>(n) + 1) return false;
  }
  return true;
}

}  // namespace flowers
