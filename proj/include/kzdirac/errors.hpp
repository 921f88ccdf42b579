#ifndef KZDIRAC_ERRORS_HPP
#define KZDIRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kzdirac {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define KZDIRAC_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                             \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// linalg
KZDIRAC_DEFINE_ERROR(NotHermitian);
KZDIRAC_DEFINE_ERROR(ShapeMismatch);
KZDIRAC_DEFINE_ERROR(Singular);

// liealg
KZDIRAC_DEFINE_ERROR(BasisMismatch);
KZDIRAC_DEFINE_ERROR(InvalidSpin);

// clifford
KZDIRAC_DEFINE_ERROR(OddDimension);

// kz
KZDIRAC_DEFINE_ERROR(SeriesDivergence);
KZDIRAC_DEFINE_ERROR(MatchPointInconsistency);
KZDIRAC_DEFINE_ERROR(NoConvergence);

// uqg
KZDIRAC_DEFINE_ERROR(InvalidQ);
KZDIRAC_DEFINE_ERROR(SingularSystem);
KZDIRAC_DEFINE_ERROR(NonUnique);
KZDIRAC_DEFINE_ERROR(DegenerateKernel);

// twist
KZDIRAC_DEFINE_ERROR(MissingPhase);
KZDIRAC_DEFINE_ERROR(OptimizerStall);

// dirac
KZDIRAC_DEFINE_ERROR(NonPositive);
KZDIRAC_DEFINE_ERROR(InvalidBranch);
KZDIRAC_DEFINE_ERROR(CutoffTooSmall);

// cli / io
KZDIRAC_DEFINE_ERROR(BadInput);

#undef KZDIRAC_DEFINE_ERROR

}  // namespace kzdirac

#endif
