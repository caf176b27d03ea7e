#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SCHUBERT_ERROR_TYPE(Name)                                  \
  struct Name : Error {                                            \
    explicit Name(const std::string& msg) : Error(msg) {}          \
  }

SCHUBERT_ERROR_TYPE(InvalidRank);
SCHUBERT_ERROR_TYPE(IndexOutOfRange);
SCHUBERT_ERROR_TYPE(ContextMismatch);
SCHUBERT_ERROR_TYPE(CapExceeded);
SCHUBERT_ERROR_TYPE(NotComparable);
SCHUBERT_ERROR_TYPE(OracleTooLarge);
SCHUBERT_ERROR_TYPE(NotHorospherical);
SCHUBERT_ERROR_TYPE(LeviNotInDescents);
SCHUBERT_ERROR_TYPE(NotReduced);
SCHUBERT_ERROR_TYPE(EmptyLevi);
SCHUBERT_ERROR_TYPE(DisconnectedDiagram);
SCHUBERT_ERROR_TYPE(InternalInconsistency);
SCHUBERT_ERROR_TYPE(ParseError);

#undef SCHUBERT_ERROR_TYPE

}  // namespace schubert
