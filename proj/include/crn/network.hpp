#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crn {

/// Index into a network's species name table.
using SpeciesId = std::int32_t;

/// Species counts, one entry per species. All entries are >= 0 for states
/// of the process; shifted vectors handed to Lyapunov evaluators may go
/// negative and are handled there.
using State = std::vector<std::int64_t>;

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct NetworkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an analysis budget (shell size, box volume, class-split
/// search width) is exceeded. The CLI maps this to its own exit code.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A complex: sparse non-negative integer stoichiometric vector. Terms are
/// kept sorted by species id with strictly positive coefficients; the empty
/// term list is the zero complex.
class Complex {
 public:
  Complex() = default;

  static Complex zero() { return Complex(); }
  static Complex unary(SpeciesId s) {
    Complex y;
    y.add_term(s, 1);
    return y;
  }
  static Complex twice(SpeciesId s) {
    Complex y;
    y.add_term(s, 2);
    return y;
  }
  static Complex pair(SpeciesId a, SpeciesId b) {
    Complex y;
    y.add_term(a, 1);
    y.add_term(b, 1);
    return y;
  }

  /// Adds `coeff` units of species `s`, merging with an existing term.
  void add_term(SpeciesId s, std::int64_t coeff);

  std::int64_t coefficient(SpeciesId s) const;
  /// Total stoichiometry sum(y_i).
  std::int64_t order() const;
  bool is_zero() const { return terms_.empty(); }

  const std::vector<std::pair<SpeciesId, std::int64_t>>& terms() const {
    return terms_;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator<(const Complex& a, const Complex& b) {
    return a.terms_ < b.terms_;
  }

 private:
  std::vector<std::pair<SpeciesId, std::int64_t>> terms_;
};

struct Reaction {
  Complex source;
  Complex product;
  double rate = 1.0;  // kappa, must be > 0

  friend bool operator==(const Reaction& a, const Reaction& b) {
    return a.source == b.source && a.product == b.product && a.rate == b.rate;
  }
};

/// Immutable reaction network: species table, reaction list, and the
/// derived complex set (deduplicated, in first-appearance order over the
/// reaction list). Construction validates all structural invariants.
class ReactionNetwork {
 public:
  ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions);

  const std::vector<std::string>& species() const { return species_; }
  SpeciesId species_count() const { return static_cast<SpeciesId>(species_.size()); }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  const std::vector<Complex>& complexes() const { return complexes_; }

  /// Index of `y` in complexes(), or -1 when absent.
  int complex_index(const Complex& y) const;
  int source_index(int reaction) const { return source_index_[reaction]; }
  int product_index(int reaction) const { return product_index_[reaction]; }

  /// Outgoing reaction indices per complex index, in reaction-list order.
  const std::vector<std::vector<int>>& outgoing() const { return outgoing_; }

  std::string complex_name(const Complex& y) const;
  std::string reaction_name(int reaction) const;

  /// Species deltas (product - source) per reaction, as dense vectors.
  const std::vector<std::vector<std::int64_t>>& deltas() const { return deltas_; }

 private:
  std::vector<std::string> species_;
  std::vector<Reaction> reactions_;
  std::vector<Complex> complexes_;
  std::map<Complex, int> complex_ids_;
  std::vector<int> source_index_;
  std::vector<int> product_index_;
  std::vector<std::vector<int>> outgoing_;
  std::vector<std::vector<std::int64_t>> deltas_;
};

/// Parses the one-reaction-per-line text format:
///
///   line    := complex ("->" | "<->") complex "@" rate ("," rate)?
///   complex := "0" | term ("+" term)*
///   term    := [integer] species-name
///
/// "#" starts a comment. "∅" is accepted as an alias for "0". A "<->" line
/// expands to two reactions (forward rate first). Species are declared by
/// first use, in appearance order.
ReactionNetwork parse_network(std::string_view text);

/// Renders a network in the same text format; parse(format(net)) is
/// equivalent to net up to reaction order.
std::string format_network(const ReactionNetwork& net);

/// True when the two networks have the same species set and the same
/// reaction set under species names (order-insensitive).
bool equivalent_networks(const ReactionNetwork& a, const ReactionNetwork& b);

/// Adds the missing in-flow (0 -> S) and out-flow (S -> 0) reactions for
/// every species, with the given per-species rates. Flow reactions already
/// present keep their original rates.
ReactionNetwork augment_flows(const ReactionNetwork& net,
                              const std::vector<double>& rates_in,
                              const std::vector<double>& rates_out);

/// lambda_y(x) = prod_i x_i (x_i - 1) ... (x_i - y_i + 1), and 0 whenever
/// some x_i < y_i. The value is integer-valued; it is returned as double so
/// large counts degrade gracefully instead of overflowing.
double complex_intensity(const Complex& y, const State& x);

/// Same falling-factorial product over real-valued coordinates (used by
/// numeric tier oracles where realized states exceed 64-bit range).
double complex_intensity(const Complex& y, const std::vector<double>& x);

/// Stochastic mass-action intensity kappa * lambda_source(x).
double reaction_intensity(const Reaction& r, const State& x);

/// (x v 1)^y with real-valued coordinates.
double pow_vee(const Complex& y, const std::vector<double>& x);

}  // namespace crn
