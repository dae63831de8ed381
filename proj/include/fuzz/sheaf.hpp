#ifndef FUZZ_SHEAF_HPP
#define FUZZ_SHEAF_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fuzz/fuzzy.hpp"

namespace fuzz {

// Finite presentation of a presheaf of monomorphisms on the augmented
// interval: each generic-fibre element carries the supremum of the cuts it
// belongs to, plus a flag saying whether that supremum is attained. The
// all-attained presentations are exactly the sheaves: on a dense total
// order, section membership sets are down-closed, so (grade, attained) is a
// complete description.
struct MonoPresheaf {
    struct Entry {
        Rational grade;
        bool attained = true;
        bool operator==(const Entry&) const = default;
    };
    IntervalLocale locale;
    std::map<std::string, Entry> elements;

    bool operator==(const MonoPresheaf&) const = default;
};

MonoPresheaf make_mono_presheaf(
    const IntervalLocale& locale,
    const std::vector<std::tuple<std::string, Rational, bool>>& elems);

// General finite presheaf on the augmented interval: a chain of sets over
// finitely many cut points, with arbitrary restriction functions between
// consecutive levels. Sections are constant on (cut_k, cut_{k+1}] in locale
// order; cuts sit strictly above the initial element and end at the top.
struct StepPresheaf {
    IntervalLocale locale;
    std::vector<Rational> cuts;                            // a_1 < ... < a_n = top
    std::vector<std::set<std::string>> levels;             // X_0 ... X_n
    std::vector<std::map<std::string, std::string>> maps;  // rho_k : X_k -> X_{k-1}
};

StepPresheaf make_step_presheaf(const IntervalLocale& locale, std::vector<Rational> cuts,
                                std::vector<std::set<std::string>> levels,
                                std::vector<std::map<std::string, std::string>> maps);

// Level cut of a fuzzy set: same carrier and grades, everything attained.
// Always a sheaf.
MonoPresheaf level_cut(const FuzzySet& f);

// Sections at a point of the augmented interval. At the adjoined bottom this
// is the conventional one-point set {"*"}.
std::set<std::string> sections(const MonoPresheaf& F, const LocaleElement& a);
std::set<std::string> sections(const StepPresheaf& E, const LocaleElement& a);

bool is_sheaf(const MonoPresheaf& F);

// Inverse of level_cut on sheaves; rejects non-sheaves and points at
// sheafify().
FuzzySet to_fuzzy_set(const MonoPresheaf& F);

// Image functor: replace each level set by its image in the generic fibre.
MonoPresheaf image_presheaf(const StepPresheaf& E);

// Associated sheaf: set every attainment flag. Idempotent, and agrees with
// the intersection of strictly smaller sections.
MonoPresheaf sheafify(const MonoPresheaf& F);

// One point at grade s: sections are a singleton exactly up to s.
MonoPresheaf representable(const LocaleElement& s, const IntervalLocale& L);

// All generic-fibre functions that restrict to sections; for sheaves these
// are exactly the fuzzy morphisms between the underlying fuzzy sets.
std::vector<std::map<std::string, std::string>> mono_hom(const MonoPresheaf& F,
                                                         const MonoPresheaf& G);

bool is_section_map(const std::map<std::string, std::string>& m, const MonoPresheaf& F,
                    const MonoPresheaf& G);

// Shared sampling grid for sectionwise oracles: all grades of the arguments,
// midpoints of consecutive distinct grades, the initial element and the top.
std::vector<LocaleElement> sample_points(const std::vector<const MonoPresheaf*>& presheaves);

}  // namespace fuzz

#endif
