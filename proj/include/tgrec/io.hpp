#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tgrec/fem.hpp"
#include "tgrec/forward.hpp"
#include "tgrec/mesh.hpp"
#include "tgrec/reconstruction.hpp"

namespace tgrec {

/// Legacy ASCII VTK unstructured grid with optional per-vertex scalar fields.
/// The title line carries the library version and a caller-chosen label so a
/// file can be matched to the run that produced it.
void write_vtk(std::ostream& out, const Mesh& m, const std::string& label,
               const std::vector<std::pair<std::string, const NodalField*>>& fields);

/// Long-format CSV of a boundary trace: node_id,t,value per row.
void write_trace_csv(std::ostream& out, const TraceSeries& trace);

/// Long-format CSV of a shrinking-inclusion study: eps,volume,metric,value,
/// one row per metric, followed by comment lines with the fitted slopes.
void write_rates_csv(std::ostream& out, const AsymptoticsStudy& study);

/// Slopes recomputed from a rates CSV (inverse of write_rates_csv); keyed by
/// metric name. Used by the validation tool.
std::vector<std::pair<std::string, double>> read_rates_slopes(std::istream& in);

/// Reconstruction summary as a canonical JSON document: keys sorted, no
/// timestamps, so identical runs produce identical bytes.
std::string report_to_json(const ReconstructionReport& rep);

}  // namespace tgrec
