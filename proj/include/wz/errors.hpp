#pragma once

#include <stdexcept>
#include <string>

namespace wz {

// Base class for all library errors. Specific types below so callers can
// catch exactly the failure they care about.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define WZ_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

// ff
WZ_DEFINE_ERROR(NotPrime);
WZ_DEFINE_ERROR(DegreeOutOfRange);
WZ_DEFINE_ERROR(DivisionByZero);
WZ_DEFINE_ERROR(FieldMismatch);
WZ_DEFINE_ERROR(ArityMismatch);

// witt
WZ_DEFINE_ERROR(CapExceeded);
WZ_DEFINE_ERROR(NonIntegralUniversal);
WZ_DEFINE_ERROR(ContextMismatch);
WZ_DEFINE_ERROR(NotCharP);
WZ_DEFINE_ERROR(NotInImageOfV);
WZ_DEFINE_ERROR(NotTorsionFree);

// geom
WZ_DEFINE_ERROR(BudgetExceeded);
WZ_DEFINE_ERROR(NonHomogeneous);
WZ_DEFINE_ERROR(InconsistentCounts);
WZ_DEFINE_ERROR(ActionNotClosed);
WZ_DEFINE_ERROR(ActionNotFree);
WZ_DEFINE_ERROR(NonIntegralQuotient);

// zeta
WZ_DEFINE_ERROR(NonIntegralSeries);
WZ_DEFINE_ERROR(MissingCounts);
WZ_DEFINE_ERROR(InsufficientTerms);
WZ_DEFINE_ERROR(NoRationalFit);
WZ_DEFINE_ERROR(ZeroConstantTerm);
WZ_DEFINE_ERROR(BadShape);

// padic
WZ_DEFINE_ERROR(BadNormalization);
WZ_DEFINE_ERROR(NotAVertex);
WZ_DEFINE_ERROR(PrecisionLoss);

// checkers
WZ_DEFINE_ERROR(HypothesisViolated);
WZ_DEFINE_ERROR(HypothesisNotDeclared);
WZ_DEFINE_ERROR(NotSmooth);
WZ_DEFINE_ERROR(TorsionPointInvalid);
WZ_DEFINE_ERROR(InternalInconsistency);

// cli / manifest
WZ_DEFINE_ERROR(UnboundVariable);

struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& expected)
        : Error("parse error at line " + std::to_string(line_) + ", col " +
                std::to_string(col_) + ": expected " + expected),
          line(line_),
          col(col_) {}
};

#undef WZ_DEFINE_ERROR

}  // namespace wz
