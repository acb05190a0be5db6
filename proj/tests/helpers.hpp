#pragma once

#include "osa/parse.hpp"

namespace osa::test {

inline Element E(const std::string& text, const Params& p) { return parse_element(text, p); }
inline Generator G(const std::string& text, const Params& p) { return parse_element(text, p).begin()->first; }

}  // namespace osa::test
