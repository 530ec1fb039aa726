#pragma once

#include <stdexcept>

namespace derange {

// Root of the library's error hierarchy. InputError covers anything a caller
// or an input file can get wrong; InternalError signals a broken invariant in
// our own bookkeeping. The CLI maps them to exit codes 1 and 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class NotABijection : public InputError { public: using InputError::InputError; };
class OverlappingCycles : public InputError { public: using InputError::InputError; };
class VertexOutOfRange : public InputError { public: using InputError::InputError; };
class InvalidCycle : public InputError { public: using InputError::InputError; };
class SizeMismatch : public InputError { public: using InputError::InputError; };
class ParseError : public InputError { public: using InputError::InputError; };
class AsymmetryError : public InputError { public: using InputError::InputError; };
class FixedPointCost : public InputError { public: using InputError::InputError; };
class ForbiddenArc : public InputError { public: using InputError::InputError; };
class NotNonSimple : public InputError { public: using InputError::InputError; };
class MultipleRepeats : public InputError { public: using InputError::InputError; };
class CreatesFixedPoint : public InputError { public: using InputError::InputError; };
class CreatesTwoCycle : public InputError { public: using InputError::InputError; };
class InvalidStart : public InputError { public: using InputError::InputError; };
class RangeError : public InputError { public: using InputError::InputError; };

}  // namespace derange
