#include "fuzz/locale.hpp"

#include <stdexcept>

namespace fuzz {

namespace {

void check_in_range(const Rational& v, const IntervalLocale& L) {
    if (v < L.lo || v > L.hi)
        throw std::domain_error("value " + format_rational(v) + " outside interval [" +
                                format_rational(L.lo) + ", " + format_rational(L.hi) + "]");
}

void check_element(const LocaleElement& e, const IntervalLocale& L) {
    if (!e.is_bottom()) check_in_range(e.rational(), L);
}

// Numeric comparison honoring the orientation.
bool value_leq(const Rational& a, const Rational& b, const IntervalLocale& L) {
    return L.orientation == Orientation::Standard ? a <= b : b <= a;
}

}  // namespace

IntervalLocale make_interval(const Rational& lo, const Rational& hi, Orientation orientation) {
    if (!(lo < hi))
        throw std::invalid_argument("degenerate interval [" + format_rational(lo) + ", " +
                                    format_rational(hi) + "]");
    return IntervalLocale{lo, hi, orientation};
}

const Rational& LocaleElement::rational() const {
    if (!value_) throw std::domain_error("bottom element has no rational value");
    return *value_;
}

std::string format_element(const LocaleElement& e) {
    return e.is_bottom() ? "bottom" : format_rational(e.rational());
}

LocaleElement parse_element(const std::string& text) {
    if (text == "bottom") return LocaleElement::bottom();
    return LocaleElement::value(parse_rational(text));
}

bool leq(const LocaleElement& a, const LocaleElement& b, const IntervalLocale& L) {
    check_element(a, L);
    check_element(b, L);
    if (a.is_bottom()) return true;
    if (b.is_bottom()) return false;
    return value_leq(a.rational(), b.rational(), L);
}

bool lt(const LocaleElement& a, const LocaleElement& b, const IntervalLocale& L) {
    return leq(a, b, L) && a != b;
}

LocaleElement meet(const std::vector<LocaleElement>& elems, const IntervalLocale& L) {
    if (elems.empty()) throw std::invalid_argument("meet of empty set; use top()");
    LocaleElement acc = elems.front();
    check_element(acc, L);
    for (std::size_t i = 1; i < elems.size(); ++i) {
        const LocaleElement& e = elems[i];
        check_element(e, L);
        if (acc.is_bottom()) return acc;  // bottom absorbs
        if (e.is_bottom()) {
            acc = e;
            continue;
        }
        if (value_leq(e.rational(), acc.rational(), L)) acc = e;
    }
    return acc;
}

LocaleElement join(const std::vector<LocaleElement>& elems, const IntervalLocale& L) {
    if (elems.empty()) throw std::invalid_argument("join of empty set; use initial()");
    LocaleElement acc = elems.front();
    check_element(acc, L);
    for (std::size_t i = 1; i < elems.size(); ++i) {
        const LocaleElement& e = elems[i];
        check_element(e, L);
        if (e.is_bottom()) continue;  // bottom is neutral
        if (acc.is_bottom() || value_leq(acc.rational(), e.rational(), L)) acc = e;
    }
    return acc;
}

LocaleElement top(const IntervalLocale& L) {
    return LocaleElement::value(L.orientation == Orientation::Standard ? L.hi : L.lo);
}

LocaleElement initial(const IntervalLocale& L) {
    return LocaleElement::value(L.orientation == Orientation::Standard ? L.lo : L.hi);
}

LocaleElement between(const LocaleElement& a, const LocaleElement& b, const IntervalLocale& L) {
    if (a.is_bottom() || b.is_bottom())
        throw std::invalid_argument("between() requires interval values, not bottom");
    if (!lt(a, b, L))
        throw std::invalid_argument("between(" + format_element(a) + ", " + format_element(b) +
                                    "): arguments must be strictly ordered");
    return LocaleElement::value((a.rational() + b.rational()) / 2);
}

LocaleElement neg(const LocaleElement& x, const IntervalLocale& L) {
    check_element(x, L);
    return x.is_bottom() ? top(L) : LocaleElement::bottom();
}

std::vector<LocaleElement> omega(const LocaleElement& y, const std::vector<LocaleElement>& sample,
                                 const IntervalLocale& L) {
    check_element(y, L);
    std::vector<LocaleElement> trace;
    for (const LocaleElement& s : sample) {
        if (s.is_bottom() || s == top(L))
            throw std::invalid_argument("omega sample must lie in the interval minus its top");
        if (lt(s, y, L)) trace.push_back(s);
    }
    return trace;
}

ProductLocale make_product(std::vector<IntervalLocale> factors) {
    if (factors.empty()) throw std::invalid_argument("product locale needs at least one factor");
    return ProductLocale{std::move(factors)};
}

namespace {

void check_tuple(const ProductElement& a, const ProductLocale& P) {
    if (a.size() != P.factors.size())
        throw std::invalid_argument("tuple arity " + std::to_string(a.size()) +
                                    " does not match factor count " +
                                    std::to_string(P.factors.size()));
    for (std::size_t i = 0; i < a.size(); ++i) check_in_range(a[i], P.factors[i]);
}

}  // namespace

bool product_leq(const ProductElement& a, const ProductElement& b, const ProductLocale& P) {
    check_tuple(a, P);
    check_tuple(b, P);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!value_leq(a[i], b[i], P.factors[i])) return false;
    return true;
}

ProductElement product_meet(const std::vector<ProductElement>& elems, const ProductLocale& P) {
    if (elems.empty()) throw std::invalid_argument("meet of empty set; use product_top()");
    ProductElement acc = elems.front();
    check_tuple(acc, P);
    for (std::size_t i = 1; i < elems.size(); ++i) {
        check_tuple(elems[i], P);
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (value_leq(elems[i][k], acc[k], P.factors[k])) acc[k] = elems[i][k];
    }
    return acc;
}

ProductElement product_join(const std::vector<ProductElement>& elems, const ProductLocale& P) {
    if (elems.empty()) throw std::invalid_argument("join of empty set; use product_initial()");
    ProductElement acc = elems.front();
    check_tuple(acc, P);
    for (std::size_t i = 1; i < elems.size(); ++i) {
        check_tuple(elems[i], P);
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (value_leq(acc[k], elems[i][k], P.factors[k])) acc[k] = elems[i][k];
    }
    return acc;
}

ProductElement product_top(const ProductLocale& P) {
    ProductElement t;
    for (const auto& f : P.factors) t.push_back(top(f).rational());
    return t;
}

ProductElement product_initial(const ProductLocale& P) {
    ProductElement t;
    for (const auto& f : P.factors) t.push_back(initial(f).rational());
    return t;
}

}  // namespace fuzz
