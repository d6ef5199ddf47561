#include "nml/errors.hpp"

namespace nml {

SingularityError::SingularityError(const std::string& what, double location)
    : Error(what), location_(location) {}

}  // namespace nml
