#ifndef LINLAY_IO_HPP
#define LINLAY_IO_HPP

#include <map>
#include <string>

#include "linlay/layout.hpp"
#include "linlay/triangle.hpp"

namespace linlay {

/// Canonical JSON document for a Layout: fixed key order, parts sorted by id,
/// edges sorted lexicographically; byte-identical across runs. Optional
/// metadata entries appear under "metadata" sorted by key.
std::string serialize_layout(const Layout& layout,
                             const std::map<std::string, std::string>& metadata = {});

/// Parses and validates a layout document. Throws std::invalid_argument with
/// a distinct message per failure: "schema violation: ...",
/// "index out of range", "edge covered twice", "duplicate part id".
Layout parse_layout(const std::string& text);

/// SVG grid rendering of T_n with one fill color per chain and a legend.
/// Labels default to "chain <index>" when not supplied.
std::string render_triangle_svg(const std::vector<Chain>& chains, int n,
                                const std::vector<std::string>& labels = {});

/// Writes content to path atomically (temp file in the same directory, then
/// rename). Throws std::runtime_error on IO failure.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace linlay

#endif
