#ifndef NANOTUBE_JSON_IO_HPP
#define NANOTUBE_JSON_IO_HPP

#include <json.hpp>

#include "nanotube/graph_oracle.hpp"
#include "nanotube/interval_set.hpp"
#include "nanotube/ranges.hpp"
#include "nanotube/spectra.hpp"

namespace nanotube {

nlohmann::json to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SegmentFamily& fam);
nlohmann::json to_json(const RangeReport& rep);

nlohmann::json to_json(const SpectrumReport& rep);
SpectrumReport spectrum_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PeriodicGraphConfig& config);
nlohmann::json to_json(const DispersionCheckReport& rep);
nlohmann::json to_json(const CompactEigenfunctionResult& res);

}  // namespace nanotube

#endif
