#include "affsym/context.hpp"

// Context is header-only apart from this anchor; the translation unit keeps
// the library self-contained if out-of-line members are added later.

namespace affsym {}
