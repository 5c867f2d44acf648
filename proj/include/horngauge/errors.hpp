// Error taxonomy. InputError covers malformed user input (CLI exit 2);
// everything else derived from Error is a numeric/algorithmic failure
// (CLI exit 3, with the failing stage named on stderr).
#pragma once

#include <stdexcept>
#include <string>

namespace horngauge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

// wpoly
struct WeightError : Error {
    using Error::Error;
};
struct DegreeConflict : Error {
    using Error::Error;
};
struct EmptyHomogeneousPart : Error {
    using Error::Error;
};

// arcs
struct InsufficientSamples : Error {
    using Error::Error;
};
struct NoValidFit : Error {
    using Error::Error;
};

// fpflow
struct SingularGradient : Error {
    using Error::Error;
};
struct SingularField : Error {
    using Error::Error;
};
struct StepLimit : Error {
    using Error::Error;
};
struct ArcNotOnVariety : Error {
    using Error::Error;
};

// homotopy
struct StartPointNotFound : Error {
    using Error::Error;
};
struct BranchJump : Error {
    using Error::Error;
};
struct NoClosure : Error {
    using Error::Error;
};

}  // namespace horngauge
