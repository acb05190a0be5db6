// Command-line front end; returns 0 on success, 1 on check failure,
// 2 on usage or parse errors.
#pragma once

#include <ostream>

namespace osa {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osa
