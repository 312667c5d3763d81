#pragma once

#include <functional>
#include <string>

#include "superheap/superpoint.hpp"

namespace superheap {

/// Factory producing a distinguished point per generator count, so one
/// structure definition serves every probe size.
using PointFactory = std::function<SuperPoint(int num_generators)>;

/// Group operations on points of a fixed domain. The axioms are verified
/// by the law harness, never assumed. `requires_units` marks structures
/// whose points need an invertible (nonzero-body) even component.
struct GroupStructure {
    std::string name;
    SuperDomain domain;
    bool requires_units = false;
    std::function<SuperPoint(const SuperPoint&, const SuperPoint&)> mul;
    std::function<SuperPoint(const SuperPoint&)> inv;
    PointFactory identity;
};

/// Ternary bracket on points of a fixed domain. `claims_heap` marks
/// brackets expected to satisfy the idempotence axioms on top of
/// para-associativity; the harness tests the claim.
struct TernaryStructure {
    std::string name;
    SuperDomain domain;
    bool claims_heap = false;
    bool requires_units = false;
    std::function<SuperPoint(const SuperPoint&, const SuperPoint&, const SuperPoint&)> bracket;
};

/// Ternary structure with a distinguished constant basepoint.
struct PointedTernaryStructure {
    TernaryStructure ternary;
    PointFactory basepoint;
};

enum class TernaryVariant {
    PlusPlusPlus,   // t1 + t2 + t3: para-associative only
    PlusMinusPlus,  // t1 - t2 + t3: satisfies the idempotence axioms too
};

// Operations on points of the odd line (0|1).
SuperPoint r01_bracket(TernaryVariant variant, const SuperPoint& a, const SuperPoint& b,
                       const SuperPoint& c);

// Translation structure on (1|1):
//   (x1, t1) * (x2, t2) = (x1 + x2 + t1 t2, t1 + t2), inverse (-x, -t),
//   bracket (x1 - x2 + x3 - t1 t2 + t1 t3 - t2 t3, t1 - t2 + t3).
SuperPoint trans_mul(const SuperPoint& a, const SuperPoint& b);
SuperPoint trans_inv(const SuperPoint& a);
SuperPoint trans_heap_closed_form(const SuperPoint& a, const SuperPoint& b, const SuperPoint& c);

// Multiplicative structure on unit-bodied points of (1|1):
//   (x1, t1) * (x2, t2) = (x1 x2 + t1 t2, x1 t2 + t1 x2),
//   inverse (1/x, -t/x^2), bracket with denominators x2 and x2^2.
// Division is multiplication by invert_even.
SuperPoint mult_mul(const SuperPoint& a, const SuperPoint& b);
SuperPoint mult_inv(const SuperPoint& a);
SuperPoint mult_heap_closed_form(const SuperPoint& a, const SuperPoint& b, const SuperPoint& c);

// Built-in bundles (registry names in the CLI contract).
GroupStructure trans_group();                 // "trans-group"
GroupStructure mult_group();                  // "mult-group"
TernaryStructure r01_semiheap();              // "r01-semiheap", +++ variant
PointedTernaryStructure r01_heap();           // "r01-heap", +-+ variant, basepoint 0
PointedTernaryStructure trans_heap();         // "trans-heap", basepoint (0, 0)
PointedTernaryStructure mult_heap();          // "mult-heap", basepoint (1, 0)
/// Deliberately non-para-associative bracket x * (y * z) on (1|1);
/// negative fixture for the harness.
TernaryStructure broken_bracket();            // "broken-bracket"

}  // namespace superheap
