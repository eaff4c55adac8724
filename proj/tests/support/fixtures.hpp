#pragma once

// Reaction-network fixtures used across the test suites. Rates are 1 unless
// a test needs otherwise; the structural criteria are rate-independent.

namespace fixtures {

// Substrate-enzyme binding core; one linkage class, not strongly connected.
inline constexpr const char* kEnzyme =
    "S + E <-> SE @ 1.0, 2.0\n"
    "SE -> E + P @ 3.0\n";

// Fully reversible enzyme core plus in/out-flows for every species.
inline constexpr const char* kEnzymeFlows =
    "S + E <-> SE @ 1, 1\n"
    "SE <-> E + P @ 1, 1\n"
    "S <-> 0 @ 1, 1\n"
    "0 <-> E @ 1, 1\n"
    "SE <-> 0 @ 1, 1\n"
    "0 <-> P @ 1, 1\n";

// Three linkage classes; only the {A+B, 2C, D} cycle is strongly connected.
inline constexpr const char* kThreeClasses =
    "2A -> B @ 1\n"
    "B <-> A + C @ 1, 1\n"
    "0 -> 2B @ 1\n"
    "A + B -> 2C @ 1\n"
    "2C -> D @ 1\n"
    "D -> A + B @ 1\n";

// Binding with exchange through the zero complex: A + B <-> C <-> 0.
inline constexpr const char* kBindingExchange =
    "A + B <-> C @ 1, 1\n"
    "C <-> 0 @ 1, 1\n";

// Double-full, binary; every double complex escapes to a unary or zero
// complex through the graph. 15 reactions over 5 species.
inline constexpr const char* kDoubleFullEscape =
    "2A -> A + B @ 1\n"
    "A + B <-> B @ 1, 1\n"
    "2D <-> A @ 1, 1\n"
    "A <-> 2C @ 1, 1\n"
    "2C -> B + C @ 1\n"
    "2B -> 0 @ 1\n"
    "0 <-> D @ 1, 1\n"
    "D <-> 2E @ 1, 1\n"
    "C -> A + C @ 1\n"
    "A + C -> C + E @ 1\n";

// Double-full, binary; 2B, 2C, 2D cannot escape, but their classes are
// weakly reversible and all-binary with pair-escape witnesses.
inline constexpr const char* kSplitCovered =
    "A + B <-> 2B @ 1, 1\n"
    "2D <-> 2C @ 1, 1\n"
    "2C <-> A + D @ 1, 1\n"
    "2A -> B + C @ 1\n"
    "B + C <-> A @ 1, 1\n"
    "C + D -> 0 @ 1\n"
    "0 <-> D @ 1, 1\n";

// The same network with every arrow made reversible (weakly reversible).
inline constexpr const char* kSplitCoveredReversible =
    "A + B <-> 2B @ 1, 1\n"
    "2D <-> 2C @ 1, 1\n"
    "2C <-> A + D @ 1, 1\n"
    "2A <-> B + C @ 1, 1\n"
    "B + C <-> A @ 1, 1\n"
    "C + D <-> 0 @ 1, 1\n"
    "0 <-> D @ 1, 1\n";

// Double-full chain over six species with a middle exchange class.
inline constexpr const char* kDoubleChain =
    "2A <-> 2B @ 1, 1\n"
    "2B <-> 2C @ 1, 1\n"
    "2C <-> 2D @ 1, 1\n"
    "A + C <-> B + C @ 1, 1\n"
    "A + B <-> 2F @ 1, 1\n"
    "2F <-> 0 @ 1, 1\n"
    "0 -> 2E @ 1\n";

// Double-full, binary, 16 reactions; three weakly reversible all-binary
// classes each holding an out-flow species, two flow-only classes.
inline constexpr const char* kOutflowSplit =
    "2A <-> A + B @ 1, 1\n"
    "A + B <-> 2D @ 1, 1\n"
    "2B <-> A + D @ 1, 1\n"
    "A + D <-> C + B @ 1, 1\n"
    "C + D <-> 2C @ 1, 1\n"
    "2C <-> A + C @ 1, 1\n"
    "B -> 0 @ 1\n"
    "0 <-> C @ 1, 1\n"
    "A -> D @ 1\n";

inline constexpr const char* kBirthDeath = "0 <-> A @ 2, 1\n";

inline constexpr const char* kBirthOnly = "0 -> A @ 1\n";

inline constexpr const char* kDecayChain =
    "A -> B @ 1\n"
    "B -> 0 @ 1\n";

inline constexpr const char* kDoublePair = "2A <-> 0 @ 1, 1\n";

}  // namespace fixtures
