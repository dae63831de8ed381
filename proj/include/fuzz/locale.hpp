#ifndef FUZZ_LOCALE_HPP
#define FUZZ_LOCALE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fuzz/rational.hpp"

namespace fuzz {

enum class Orientation { Standard, Opposite };

// A closed nondegenerate rational interval [lo, hi] read either with the
// numeric order or the reversed one. Reversed intervals are what diameter
// filtrations live over: smaller thresholds sit higher in the lattice.
struct IntervalLocale {
    Rational lo;
    Rational hi;
    Orientation orientation = Orientation::Standard;

    bool operator==(const IntervalLocale& other) const {
        return lo == other.lo && hi == other.hi && orientation == other.orientation;
    }
};

IntervalLocale make_interval(const Rational& lo, const Rational& hi,
                             Orientation orientation = Orientation::Standard);

// An element of the augmented lattice: either the adjoined bottom (strictly
// below the whole interval) or a value in [lo, hi].
class LocaleElement {
  public:
    static LocaleElement bottom() { return LocaleElement(); }
    static LocaleElement value(Rational v) { return LocaleElement(std::move(v)); }

    bool is_bottom() const { return !value_.has_value(); }
    const Rational& rational() const;

    bool operator==(const LocaleElement& other) const { return value_ == other.value_; }
    bool operator!=(const LocaleElement& other) const { return !(*this == other); }

  private:
    LocaleElement() = default;
    explicit LocaleElement(Rational v) : value_(std::move(v)) {}
    std::optional<Rational> value_;
};

std::string format_element(const LocaleElement& e);
LocaleElement parse_element(const std::string& text);  // "bottom" or a rational

// Order and lattice operations on the augmented interval. Every entry point
// checks that its value arguments lie inside [lo, hi].
bool leq(const LocaleElement& a, const LocaleElement& b, const IntervalLocale& L);
bool lt(const LocaleElement& a, const LocaleElement& b, const IntervalLocale& L);

LocaleElement meet(const std::vector<LocaleElement>& elems, const IntervalLocale& L);
LocaleElement join(const std::vector<LocaleElement>& elems, const IntervalLocale& L);

LocaleElement top(const IntervalLocale& L);
LocaleElement initial(const IntervalLocale& L);

// Arithmetic midpoint; witnesses density. Requires a < b in the locale
// order with both arguments inside the interval.
LocaleElement between(const LocaleElement& a, const LocaleElement& b, const IntervalLocale& L);

// Pseudocomplement in the augmented lattice: bottom for nonzero arguments,
// top for bottom itself. Satisfies neg(neg(neg(x))) == neg(x).
LocaleElement neg(const LocaleElement& x, const IntervalLocale& L);

// Trace of the power-set imbedding y ->  { s : s < y } on a finite sample.
// The sample must avoid the top element.
std::vector<LocaleElement> omega(const LocaleElement& y, const std::vector<LocaleElement>& sample,
                                 const IntervalLocale& L);

// Finite products of intervals; the order is componentwise and genuinely
// partial once there are two factors.
struct ProductLocale {
    std::vector<IntervalLocale> factors;
};

ProductLocale make_product(std::vector<IntervalLocale> factors);

using ProductElement = std::vector<Rational>;

bool product_leq(const ProductElement& a, const ProductElement& b, const ProductLocale& P);
ProductElement product_meet(const std::vector<ProductElement>& elems, const ProductLocale& P);
ProductElement product_join(const std::vector<ProductElement>& elems, const ProductLocale& P);
ProductElement product_top(const ProductLocale& P);
ProductElement product_initial(const ProductLocale& P);

}  // namespace fuzz

#endif
