#ifndef FUZZ_FUZZY_HPP
#define FUZZ_FUZZY_HPP

#include <map>
#include <string>
#include <vector>

#include "fuzz/locale.hpp"

namespace fuzz {

// A finite set of identifiers graded over an interval. Grades always lie in
// the interval itself, never at the adjoined bottom.
struct FuzzySet {
    IntervalLocale locale;
    std::map<std::string, Rational> grades;

    bool operator==(const FuzzySet& other) const {
        return locale == other.locale && grades == other.grades;
    }
};

FuzzySet make_fuzzy_set(const IntervalLocale& locale,
                        const std::vector<std::pair<std::string, Rational>>& elems);

// A function between carriers that never decreases the grade.
struct FuzzyMorphism {
    FuzzySet source;
    FuzzySet target;
    std::map<std::string, std::string> map;
};

struct MorphismReport {
    bool ok = true;
    std::vector<std::string> violations;  // source elements where the grade drops
};

// Structural problems (mismatched locales, a non-total map, stray targets)
// throw; grade violations are reported.
MorphismReport validate_morphism(const FuzzyMorphism& m);

FuzzyMorphism identity_morphism(const FuzzySet& x);
FuzzyMorphism compose(const FuzzyMorphism& outer, const FuzzyMorphism& inner);

// A finite shape: labelled nodes and generating arrows. The locale field is
// consulted when there are no nodes (empty limits and colimits still need to
// know where the terminal or initial object lives).
struct Diagram {
    std::optional<IntervalLocale> locale;
    std::map<std::string, FuzzySet> nodes;
    struct Arrow {
        std::string from;
        std::string to;
        std::map<std::string, std::string> map;
    };
    std::vector<Arrow> arrows;
};

void validate_diagram(const Diagram& d);
IntervalLocale diagram_locale(const Diagram& d);

struct LimitResult {
    FuzzySet object;
    // one projection per node label
    std::map<std::string, FuzzyMorphism> legs;
};

// Carrier: arrow-compatible tuples over the node carriers, named
// "(id1,id2,...)" in node-label order. Grade: meet of the component grades.
LimitResult limit(const Diagram& d);

struct ColimitResult {
    FuzzySet object;
    std::map<std::string, FuzzyMorphism> legs;
};

// Carrier: classes of the equivalence generated by all arrows on the
// disjoint union, named after the least (node, element) pair. Grade: join of
// the grades over the whole class.
ColimitResult colimit(const Diagram& d);

bool is_subobject(const FuzzySet& a, const FuzzySet& ambient);
FuzzySet subobject_union(const FuzzySet& a, const FuzzySet& b, const FuzzySet& ambient);
FuzzySet subobject_meet(const FuzzySet& a, const FuzzySet& b, const FuzzySet& ambient);

}  // namespace fuzz

#endif
