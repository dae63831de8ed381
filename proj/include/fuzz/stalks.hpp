#ifndef FUZZ_STALKS_HPP
#define FUZZ_STALKS_HPP

#include <optional>

#include "fuzz/sheaf.hpp"

namespace fuzz {

// Where stalks are taken: the adjoined bottom (giving the generic fibre) or
// an interval value strictly below the top.
class StalkPoint {
  public:
    static StalkPoint bottom() { return StalkPoint(); }
    static StalkPoint at(const LocaleElement& x, const IntervalLocale& L);

    bool is_bottom() const { return !point_.has_value(); }
    const LocaleElement& point() const;

    bool operator==(const StalkPoint&) const = default;

  private:
    StalkPoint() = default;
    std::optional<LocaleElement> point_;
};

std::string format_stalk_point(const StalkPoint& p);

// Filtered colimit of sections above the point. For mono presentations this
// is the strict cut {y : grade(y) > x}; attainment flags never matter.
std::set<std::string> stalk(const MonoPresheaf& F, const StalkPoint& p);
std::set<std::string> stalk(const StepPresheaf& E, const StalkPoint& p);

// Finite set of points at which the stalk functions of both arguments take
// every value: bottom, the initial element, all grades strictly below the
// top, and a midpoint between each consecutive pair of those grades.
// Ordered bottom first, then ascending in the locale order.
std::vector<StalkPoint> stalk_points(const MonoPresheaf& E, const MonoPresheaf& F);

enum class MapMode { Mono, Epi, Iso };

struct StalkVerdict {
    MapMode mode;
    bool ok = true;
    std::optional<StalkPoint> point;  // least failing point when !ok
    std::string element;
    std::string reason;  // "not-injective" | "not-surjective"
};

// Checks injectivity / surjectivity / bijectivity of the induced map on
// every stalk. Evaluation runs on a value-complete grid (bottom, initial,
// and a midpoint inside each constancy interval of the two step functions),
// scanned bottom-first then ascending, and reports the least failing point.
// On success, the conclusions this licenses at section level are verified:
// sectionwise injectivity for Mono, sectionwise bijectivity for Iso, and
// generic-fibre surjectivity for Epi.
StalkVerdict stalkwise_check(const std::map<std::string, std::string>& m, const MonoPresheaf& E,
                             const MonoPresheaf& F, MapMode mode);

// Sheafification never moves a stalk; exposed as a regression oracle.
bool stalks_invariant_under_sheafify(const MonoPresheaf& F);

// A presentation on a product of intervals, restricted to the first-factor
// axis s -> (s, initial, ..., initial).
struct ProductAxisData {
    ProductLocale product;
    MonoPresheaf axis;  // over product.factors[0]
};

ProductAxisData make_product_axis(const ProductLocale& product, MonoPresheaf axis);

std::set<std::string> product_stalk(const ProductAxisData& data, const StalkPoint& p);

}  // namespace fuzz

#endif
