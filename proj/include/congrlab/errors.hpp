#pragma once

#include <stdexcept>
#include <string>

namespace congrlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arith
struct CompositeModulus : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };

// msets
struct InvalidSpec : Error { using Error::Error; };
struct ContextMismatch : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct SliceTooLarge : Error { using Error::Error; };

// count
struct InvalidRange : Error { using Error::Error; };
struct ZeroInSet : Error { using Error::Error; };
struct ZeroLambda : Error { using Error::Error; };
struct NotSquarefree : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// farey
struct DenominatorDivisibleByP : Error { using Error::Error; };
struct RangeTooLarge : Error { using Error::Error; };
struct OrderTooSmall : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

// chars
struct NotSubgroup : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };

// harness
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace congrlab
