#include "spencer/cases.hpp"

namespace spencer {
// registry filled in once the core builds
}
