#pragma once

// Wire formats. Big integers are always written as decimal strings.

#include <ostream>
#include <vector>

#include "json.hpp"

#include "ghost/cycle.hpp"
#include "ghost/dynamics.hpp"
#include "ghost/padic.hpp"
#include "ghost/patterns.hpp"
#include "ghost/scan.hpp"

namespace ghost {

using Json = nlohmann::ordered_json;

Json to_json(const PadicInt& a);
PadicInt padic_from_json(const Json& j);

Json to_json(const ParityPattern& p, bool admissible);
Json to_json(const GhostCycle& g);
Json to_json(const CycleTrace& t, bool admissible, OddRule rule = {});
Json to_json(const ScanRecord& r);
Json summary_json(const ScanReport& report);
Json to_json(const DensityReport& report);

// Writes one compact JSON object per record, newline terminated.
void write_jsonl(std::ostream& out, const std::vector<ScanRecord>& records);

void write_fiber_csv(std::ostream& out, const std::vector<FiberRow>& rows);
Json to_json(const std::vector<FiberRow>& rows);

}  // namespace ghost
