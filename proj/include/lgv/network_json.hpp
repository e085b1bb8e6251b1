#ifndef LGV_NETWORK_JSON_HPP
#define LGV_NETWORK_JSON_HPP

#include "lgv/matrix.hpp"
#include "lgv/network.hpp"

#include <string>

namespace lgv {

/// Thrown on malformed network files: bad JSON, missing fields, bad
/// weight syntax. The message carries the offending field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses the network JSON document
///   {"vertices": [..], "edges": [{"from","to","weight"}, ..],
///    "sources": [..], "sinks": [..]}
/// with weights as "p" or "p/q" strings. Structural problems (unknown
/// endpoints, cycles, ...) are not thrown here; they surface in the
/// returned network's validation report.
PlanarNetwork parse_network_file(const std::string& text, const std::string& name = "");

std::string network_to_json(const PlanarNetwork& net);

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

} // namespace lgv

#endif // LGV_NETWORK_JSON_HPP
