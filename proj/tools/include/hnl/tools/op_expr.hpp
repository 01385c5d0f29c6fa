#pragma once

#include <string_view>

#include "hnl/skew_op.hpp"

namespace hnl::cli {

/// Parse an operator expression such as "W[0,1,2]", "act(W[0,1], W[0,1])",
/// "inner(box(2,1); x, y)" or "2*D[0] ^ D[1]". See docs/grammar.md.
SkewOp parse_op_expr(std::string_view text);

}  // namespace hnl::cli
