#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace crn {

namespace {

constexpr std::int64_t kMaxCoefficient = 1'000'000;

std::string format_rate(double rate) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", rate);
  return buf;
}

}  // namespace

void Complex::add_term(SpeciesId s, std::int64_t coeff) {
  if (coeff <= 0) throw NetworkError("complex term coefficient must be positive");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const auto& t, SpeciesId id) { return t.first < id; });
  if (it != terms_.end() && it->first == s) {
    it->second += coeff;
  } else {
    terms_.insert(it, {s, coeff});
  }
}

std::int64_t Complex::coefficient(SpeciesId s) const {
  for (const auto& [id, c] : terms_)
    if (id == s) return c;
  return 0;
}

std::int64_t Complex::order() const {
  std::int64_t sum = 0;
  for (const auto& [id, c] : terms_) sum += c;
  return sum;
}

ReactionNetwork::ReactionNetwork(std::vector<std::string> species,
                                 std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  std::set<std::string> seen_names;
  for (const auto& name : species_) {
    if (name.empty()) throw NetworkError("empty species name");
    for (char c : name)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw NetworkError("species name contains whitespace: '" + name + "'");
    if (!seen_names.insert(name).second)
      throw NetworkError("duplicate species name: " + name);
  }
  if (reactions_.empty()) throw NetworkError("network has no reactions");

  std::set<std::pair<Complex, Complex>> seen_reactions;
  auto intern = [&](const Complex& y) {
    auto [it, inserted] = complex_ids_.try_emplace(y, static_cast<int>(complexes_.size()));
    if (inserted) complexes_.push_back(y);
    return it->second;
  };

  const SpeciesId d = species_count();
  for (const auto& r : reactions_) {
    for (const Complex* y : {&r.source, &r.product})
      for (const auto& [id, c] : y->terms()) {
        if (id < 0 || id >= d)
          throw NetworkError("complex references unknown species id " + std::to_string(id));
        if (c > kMaxCoefficient) throw NetworkError("stoichiometric coefficient overflow");
      }
    if (!(r.rate > 0.0) || !std::isfinite(r.rate))
      throw NetworkError("reaction rate must be a positive finite number");
    if (r.source == r.product)
      throw NetworkError("self-loop reaction " + complex_name(r.source) + " -> " +
                         complex_name(r.product));
    if (!seen_reactions.insert({r.source, r.product}).second)
      throw NetworkError("duplicate reaction " + complex_name(r.source) + " -> " +
                         complex_name(r.product));
    source_index_.push_back(intern(r.source));
    product_index_.push_back(intern(r.product));
  }

  outgoing_.resize(complexes_.size());
  for (std::size_t j = 0; j < reactions_.size(); ++j)
    outgoing_[source_index_[j]].push_back(static_cast<int>(j));

  deltas_.reserve(reactions_.size());
  for (const auto& r : reactions_) {
    std::vector<std::int64_t> delta(d, 0);
    for (const auto& [id, c] : r.product.terms()) delta[id] += c;
    for (const auto& [id, c] : r.source.terms()) delta[id] -= c;
    deltas_.push_back(std::move(delta));
  }
}

int ReactionNetwork::complex_index(const Complex& y) const {
  auto it = complex_ids_.find(y);
  return it == complex_ids_.end() ? -1 : it->second;
}

std::string ReactionNetwork::complex_name(const Complex& y) const {
  if (y.is_zero()) return "0";
  std::string out;
  for (const auto& [id, c] : y.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + " ";
    out += species_[id];
  }
  return out;
}

std::string ReactionNetwork::reaction_name(int reaction) const {
  const Reaction& r = reactions_[reaction];
  return complex_name(r.source) + " -> " + complex_name(r.product);
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_blanks() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, col, what); }
};

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// UTF-8 encoding of the empty-set sign, accepted as the zero complex.
constexpr std::string_view kEmptySetUtf8 = "\xe2\x88\x85";

class Parser {
 public:
  explicit Parser(std::string_view text) : cur_{text} {}

  ReactionNetwork run() {
    while (!cur_.eof()) {
      cur_.skip_blanks();
      if (cur_.eof()) break;
      if (cur_.peek() == '\n') {
        cur_.advance();
        continue;
      }
      parse_line();
    }
    if (reactions_.empty()) throw ParseError(cur_.line, cur_.col, "no reactions in input");
    try {
      return ReactionNetwork(std::move(species_), std::move(reactions_));
    } catch (const NetworkError& e) {
      throw ParseError(cur_.line, 1, e.what());
    }
  }

 private:
  Cursor cur_;
  std::vector<std::string> species_;
  std::map<std::string, SpeciesId, std::less<>> species_ids_;
  std::vector<Reaction> reactions_;
  std::set<std::pair<Complex, Complex>> seen_;

  SpeciesId intern_species(std::string_view name) {
    auto it = species_ids_.find(name);
    if (it != species_ids_.end()) return it->second;
    SpeciesId id = static_cast<SpeciesId>(species_.size());
    species_.emplace_back(name);
    species_ids_.emplace(species_.back(), id);
    return id;
  }

  void parse_line() {
    int line0 = cur_.line, col0 = cur_.col;
    Complex lhs = parse_complex();
    cur_.skip_blanks();
    bool reversible = false;
    if (!cur_.eof() && cur_.peek() == '<') {
      expect("<->");
      reversible = true;
    } else {
      expect("->");
    }
    Complex rhs = parse_complex();
    cur_.skip_blanks();
    if (cur_.eof() || cur_.peek() != '@') cur_.fail("expected '@' before rate");
    cur_.advance();
    double fwd = parse_rate();
    double bwd = 0.0;
    cur_.skip_blanks();
    if (reversible) {
      if (cur_.eof() || cur_.peek() != ',')
        cur_.fail("reversible reaction needs two rates: forward, backward");
      cur_.advance();
      bwd = parse_rate();
      cur_.skip_blanks();
    }
    if (!cur_.eof() && cur_.peek() != '\n') cur_.fail("unexpected trailing text");

    add_reaction(lhs, rhs, fwd, line0, col0);
    if (reversible) add_reaction(rhs, lhs, bwd, line0, col0);
  }

  void add_reaction(const Complex& src, const Complex& dst, double rate, int line, int col) {
    if (src == dst) throw ParseError(line, col, "self-loop reaction (source equals product)");
    if (!seen_.insert({src, dst}).second)
      throw ParseError(line, col, "duplicate reaction");
    reactions_.push_back({src, dst, rate});
  }

  Complex parse_complex() {
    cur_.skip_blanks();
    if (cur_.eof()) cur_.fail("expected a complex");
    Complex y;
    if (try_zero_token()) return y;
    while (true) {
      parse_term(y);
      cur_.skip_blanks();
      if (!cur_.eof() && cur_.peek() == '+') {
        cur_.advance();
        cur_.skip_blanks();
      } else {
        break;
      }
    }
    return y;
  }

  bool try_zero_token() {
    if (cur_.text.substr(cur_.pos, kEmptySetUtf8.size()) == kEmptySetUtf8) {
      for (std::size_t i = 0; i < kEmptySetUtf8.size(); ++i) cur_.advance();
      return true;
    }
    // "0" is the zero complex only when not the start of a coefficient.
    if (cur_.peek() == '0') {
      std::size_t next = cur_.pos + 1;
      if (next >= cur_.text.size() || !std::isdigit(static_cast<unsigned char>(cur_.text[next]))) {
        std::size_t after = next;
        while (after < cur_.text.size() &&
               (cur_.text[after] == ' ' || cur_.text[after] == '\t'))
          ++after;
        if (after >= cur_.text.size() || !is_name_start(cur_.text[after])) {
          cur_.advance();
          return true;
        }
      }
    }
    return false;
  }

  void parse_term(Complex& y) {
    cur_.skip_blanks();
    if (cur_.eof()) cur_.fail("expected a species term");
    std::int64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      coeff = 0;
      int line0 = cur_.line, col0 = cur_.col;
      while (!cur_.eof() && std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
        coeff = coeff * 10 + (cur_.peek() - '0');
        if (coeff > kMaxCoefficient)
          throw ParseError(line0, col0, "stoichiometric coefficient overflow");
        cur_.advance();
      }
      if (coeff == 0) throw ParseError(line0, col0, "zero stoichiometric coefficient");
      cur_.skip_blanks();
    }
    if (cur_.eof() || !is_name_start(cur_.peek())) cur_.fail("expected a species name");
    std::string name;
    while (!cur_.eof() && is_name_char(cur_.peek())) {
      name += cur_.peek();
      cur_.advance();
    }
    y.add_term(intern_species(name), coeff);
  }

  double parse_rate() {
    cur_.skip_blanks();
    int line0 = cur_.line, col0 = cur_.col;
    std::size_t start = cur_.pos;
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
          c == 'e' || c == 'E') {
        cur_.advance();
      } else {
        break;
      }
    }
    if (cur_.pos == start) cur_.fail("expected a rate constant");
    std::string token(cur_.text.substr(start, cur_.pos - start));
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size())
      throw ParseError(line0, col0, "malformed rate constant '" + token + "'");
    if (!std::isfinite(v) || v <= 0.0)
      throw ParseError(line0, col0, "rate constant must be positive, got '" + token + "'");
    return v;
  }

  void expect(std::string_view tok) {
    cur_.skip_blanks();
    if (cur_.text.substr(cur_.pos, tok.size()) != tok)
      cur_.fail("expected '" + std::string(tok) + "'");
    for (std::size_t i = 0; i < tok.size(); ++i) cur_.advance();
  }
};

}  // namespace

ReactionNetwork parse_network(std::string_view text) { return Parser(text).run(); }

std::string format_network(const ReactionNetwork& net) {
  std::ostringstream out;
  for (const auto& r : net.reactions()) {
    out << net.complex_name(r.source) << " -> " << net.complex_name(r.product) << " @ "
        << format_rate(r.rate) << "\n";
  }
  return out.str();
}

bool equivalent_networks(const ReactionNetwork& a, const ReactionNetwork& b) {
  std::set<std::string> sa(a.species().begin(), a.species().end());
  std::set<std::string> sb(b.species().begin(), b.species().end());
  if (sa != sb) return false;

  using NamedComplex = std::map<std::string, std::int64_t>;
  auto named = [](const ReactionNetwork& net) {
    std::set<std::tuple<NamedComplex, NamedComplex, double>> out;
    for (const auto& r : net.reactions()) {
      NamedComplex src, dst;
      for (const auto& [id, c] : r.source.terms()) src[net.species()[id]] = c;
      for (const auto& [id, c] : r.product.terms()) dst[net.species()[id]] = c;
      out.insert({std::move(src), std::move(dst), r.rate});
    }
    return out;
  };
  return named(a) == named(b);
}

ReactionNetwork augment_flows(const ReactionNetwork& net, const std::vector<double>& rates_in,
                              const std::vector<double>& rates_out) {
  const SpeciesId d = net.species_count();
  if (rates_in.size() != static_cast<std::size_t>(d) ||
      rates_out.size() != static_cast<std::size_t>(d))
    throw NetworkError("augment_flows: need one in/out rate per species");
  for (SpeciesId i = 0; i < d; ++i)
    if (!(rates_in[i] > 0.0) || !(rates_out[i] > 0.0))
      throw NetworkError("augment_flows: flow rates must be positive");

  std::vector<Reaction> reactions = net.reactions();
  std::set<std::pair<Complex, Complex>> present;
  for (const auto& r : reactions) present.insert({r.source, r.product});

  for (SpeciesId i = 0; i < d; ++i) {
    Complex s = Complex::unary(i);
    if (!present.count({Complex::zero(), s}))
      reactions.push_back({Complex::zero(), s, rates_in[i]});
    if (!present.count({s, Complex::zero()}))
      reactions.push_back({s, Complex::zero(), rates_out[i]});
  }
  return ReactionNetwork(net.species(), std::move(reactions));
}

double complex_intensity(const Complex& y, const State& x) {
  double prod = 1.0;
  for (const auto& [id, c] : y.terms()) {
    std::int64_t xi = x.at(id);
    if (xi < c) return 0.0;
    for (std::int64_t k = 0; k < c; ++k) prod *= static_cast<double>(xi - k);
  }
  return prod;
}

double complex_intensity(const Complex& y, const std::vector<double>& x) {
  double prod = 1.0;
  for (const auto& [id, c] : y.terms()) {
    double xi = x.at(id);
    if (xi < static_cast<double>(c)) return 0.0;
    for (std::int64_t k = 0; k < c; ++k) prod *= (xi - static_cast<double>(k));
  }
  return prod;
}

double reaction_intensity(const Reaction& r, const State& x) {
  return r.rate * complex_intensity(r.source, x);
}

double pow_vee(const Complex& y, const std::vector<double>& x) {
  double prod = 1.0;
  for (const auto& [id, c] : y.terms()) {
    double base = std::max(x.at(id), 1.0);
    for (std::int64_t k = 0; k < c; ++k) prod *= base;
  }
  return prod;
}

}  // namespace crn
