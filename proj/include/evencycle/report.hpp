#pragma once

// JSON views of the library types. Field order is fixed (ordered_json) so
// reports are byte-stable.

#include <json.hpp>
#include <string>

#include "evencycle/classify.hpp"
#include "evencycle/errors.hpp"
#include "evencycle/structure.hpp"

namespace evencycle {

using Json = nlohmann::ordered_json;

Json to_json(const Cycle& c);
Json to_json(const Path& p);
Json to_json(const Certificate& cert);
Json to_json(const HuntResult& r);
Json to_json(const HoleContext& ctx);
Json to_json(const PreconditionFailed& e);

std::string_view precondition_name(PreconditionFailed::Kind k);

/// Written on disproof-grade events.
struct CounterexampleBundle {
  std::string graph6;
  std::string operation;
  std::vector<std::string> preconditions_verified;
  Json witness;
};

Json to_json(const CounterexampleBundle& b);
void write_bundle(const std::string& path, const CounterexampleBundle& b);

} // namespace evencycle
