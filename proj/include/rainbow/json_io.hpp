#ifndef RAINBOW_JSON_IO_HPP
#define RAINBOW_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rainbow/oracle.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

// On-disk formats are 1-based; everything here shifts to and from the
// internal 0-based residues. All parsers throw Error(ParseError, ...).

// {"t": int, "sets": [[int,...],...]}
Instance parse_instance(const std::string& text);
nlohmann::json instance_to_json(const Instance& instance);

// {"assignment": [[set_index, vertex],...],
//  "trace": {"rho","permutation","k","case","r","window_start"}}
// The trace's window_start is a 1-based label in normalized arc coordinates.
nlohmann::json certificate_to_json(const RainbowCertificate& certificate);

// Extracts the assignment pairs as 0-based (set_index, vertex) values for
// check_assignment; out-of-range entries are passed through untouched so the
// checker can classify them. The trace, if present, is ignored.
std::vector<std::pair<int, int>> parse_certificate_assignment(const std::string& text);

// {"elapsed_ms","failing","failures","families","s","t"}; elapsed_ms is the
// only field that varies between identical runs.
nlohmann::json scan_report_to_json(const ScanReport& report);

}  // namespace rainbow

#endif
