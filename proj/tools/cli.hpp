#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bvs/braid.hpp"

namespace bvs::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kInputError = 2 };

// Accepts "A2", a JSON object {"type":"A","rank":2} or
// {"matrix":[[2,-1],[-1,2]],"d":[1,1]}, or "@path" to a file holding either.
CartanData parse_cartan(const std::string& text);

// Letters separated by commas or whitespace, e.g. "-2,1,2,1,-1,1,2".
DoubleBraidWord parse_word(const std::string& text);

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bvs::cli
