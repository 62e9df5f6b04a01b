#include "subzeta/errors.hpp"

namespace subzeta {

void fail_precondition(const std::string& what) { throw PreconditionError(what); }

}  // namespace subzeta
