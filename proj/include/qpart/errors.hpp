#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

/* Input does not satisfy the documented domain of an operation (e.g. a
 * bijection applied to a partition outside its source class). */
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* A (part, multiplicity) pair matched none of the case rules of a map.
 * This signals a bug, not bad input; the rule tables are meant to be total
 * on their preconditioned domain. */
struct InternalCaseGap : std::logic_error {
    using std::logic_error::logic_error;
};

/* No admissible expansion exists in an inverse map (e.g. no peel size
 * yields a multiplicity in the allowed residues). */
struct NoValidChoice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* The image of a map, after multiset merging, failed its target class
 * membership check. Never silently dropped; sweeps collect these. */
struct PostconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Series inversion requires a constant term of +1 or -1. */
struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

/* The requested class has no closed product form. */
struct UnsupportedClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Marker arity of two weighted series disagrees. */
struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* A parameter specialization would produce a non-unit formal factor. */
struct InvalidSpecialization : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qpart
