// cutvor: analyses of cut-lattice Voronoi cells, admissible divisors, and
// mixed/twisted Voronoi tilings.  Talks to the library through its C API
// only.
#include <cutvor/cutvor.h>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("input", "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(cutvor_status st, char* text, const std::string& out_path) {
    if (st != CUTVOR_OK) {
        cutvor_string_free(text);
        std::cerr << "error: " << cutvor_last_error() << "\n";
        return st == CUTVOR_ERR_PARSE ? 2 : 1;
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            cutvor_string_free(text);
            return 1;
        }
        out << text;
    }
    cutvor_string_free(text);
    return 0;
}

struct GraphHandle {
    cutvor_graph* g = nullptr;
    ~GraphHandle() { cutvor_graph_free(g); }
};

int load_graph(const std::string& path, GraphHandle& gh) {
    std::string text = read_file(path);
    cutvor_status st = cutvor_graph_from_json(text.c_str(), &gh.g);
    if (st != CUTVOR_OK) {
        std::cerr << "error: " << cutvor_last_error() << "\n";
        return st == CUTVOR_ERR_PARSE ? 2 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-lattice Voronoi cells, admissible divisors, and mixed tilings"};
    app.require_subcommand(1);

    std::string graph_path, output, format = "json";
    std::string div1_path, div2_path, point_path;
    std::uint64_t samples = 0, seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("graph", graph_path, "graph JSON file")->required();
        sub->add_option("-o,--output", output, "output file (default stdout)");
        if (with_format)
            sub->add_option("--format", format, "output format: json|dot|svg")
                ->check(CLI::IsMember({"json", "dot", "svg"}));
    };

    auto* analyze = app.add_subcommand(
        "analyze", "spanning tree count, q Gram matrix, bond elements");
    add_common(analyze, false);

    auto* faces =
        app.add_subcommand("faces", "face poset of the cut Voronoi cell");
    add_common(faces, true);

    auto* admissible = app.add_subcommand(
        "admissible", "G-admissibility / equivalence of two divisors");
    add_common(admissible, false);
    admissible->add_option("divisor1", div1_path, "first divisor JSON file")->required();
    admissible->add_option("divisor2", div2_path, "second divisor JSON file")->required();

    auto* tiles =
        app.add_subcommand("tiles", "mixed/twisted Voronoi tiling and dual skeleton");
    add_common(tiles, true);
    tiles->add_option("--samples", samples, "coverage self-check sample count");
    tiles->add_option("--seed", seed, "sampling seed");

    auto* locate = app.add_subcommand("locate", "find the tiles containing a point");
    add_common(locate, false);
    locate->add_option("point", point_path, "point JSON file")->required();

    auto* render =
        app.add_subcommand("render", "SVG of the tiling (3-vertex graphs only)");
    add_common(render, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        GraphHandle gh;
        if (int rc = load_graph(graph_path, gh)) return rc;
        char* out = nullptr;
        cutvor_status st = CUTVOR_OK;
        if (*analyze) {
            st = cutvor_analyze(gh.g, &out);
        } else if (*faces) {
            st = cutvor_faces(gh.g, format.c_str(), &out);
        } else if (*admissible) {
            std::string d1 = read_file(div1_path), d2 = read_file(div2_path);
            st = cutvor_admissible(gh.g, d1.c_str(), d2.c_str(), &out);
        } else if (*tiles) {
            st = cutvor_tiles(gh.g, format.c_str(), samples, seed, &out);
        } else if (*locate) {
            std::string pt = read_file(point_path);
            st = cutvor_locate(gh.g, pt.c_str(), &out);
        } else if (*render) {
            st = cutvor_render_svg(gh.g, &out);
        }
        return emit(st, out, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
