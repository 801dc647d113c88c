#pragma once

#include <json.hpp>

#include "snmat/core.hpp"
#include "snmat/deep.hpp"
#include "snmat/expr.hpp"
#include "snmat/leavitt.hpp"
#include "snmat/presentations.hpp"
#include "snmat/representations.hpp"

namespace snmat {

using json = nlohmann::json;

// Element dumps are self-describing: they carry the chain and field, scalars
// as exact strings, and entries sorted by (row, col).
json to_json(const CoreElement& x);
json to_json(const ModuleVector& v);
json to_json(const LeavittElement& x);
json to_json(const DeepElement& x);
json to_json(const MixedElement& x);
json to_json(const TailVector& v);
json to_json(const DenseMatrix& m);
json to_json(const TensorVector& x);
json to_json(const AarTriple& t);
json to_json(const RootChain& rc);

CoreElement core_from_json(const json& j);
TensorVector tensor_from_json(const json& j);

}  // namespace snmat
