#ifndef CUTVOR_IO_HPP
#define CUTVOR_IO_HPP

#include "divisors.hpp"
#include "tiling.hpp"

#include <cstdint>
#include <string>

namespace cutvor {

struct GraphData {
    Multigraph g;
    LengthFunction ell;
    TwistC1 tw;
};

// { "vertices": n, "edges": [[u,v],...], "lengths": [...], "twist": [...] }
GraphData parse_graph_json(const std::string& text);
std::string graph_to_json(const GraphData& gd);

// { "on_G": {"0": 1, ...}, "interior": [{"edge":k,"dir":"+"|"-","j":j,"coeff":c}] }
Divisor parse_divisor_json(const std::string& text,
                           std::shared_ptr<const Subdivision> host);
std::string divisor_to_json(const Divisor& d);

// { "point": ["p/q", ...] }
Cochain0 parse_point_json(const std::string& text, int vertex_count);

std::string analyze_json(const GraphData& gd);
std::string faces_json(const GraphData& gd);
std::string faces_dot(const GraphData& gd);
std::string admissible_json(const GraphData& gd, const std::string& d1_json,
                            const std::string& d2_json);
std::string tiles_json(const GraphData& gd, std::uint64_t samples, std::uint64_t seed);
std::string tiles_dot(const GraphData& gd);
std::string locate_json(const GraphData& gd, const std::string& point_json);
std::string render_svg(const GraphData& gd);

}  // namespace cutvor

#endif
