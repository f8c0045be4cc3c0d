#pragma once

#include <string>

namespace mvfp {

// Shortest decimal string that round-trips to exactly the same double.
// Used for trace CSV cells, problem-file rendering and CLI messages.
std::string format_number(double value);

} // namespace mvfp
