#include "cutvor/cutvor.h"

#include "io.hpp"

#include <cstring>

using namespace cutvor;

struct cutvor_graph_s {
    GraphData data;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
cutvor_status wrap(char** out, Fn&& fn) {
    if (out) *out = nullptr;
    try {
        std::string s = fn();
        if (out) *out = dup_string(s);
        g_last_error.clear();
        return CUTVOR_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return CUTVOR_ERR_PARSE;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return CUTVOR_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CUTVOR_ERR_OTHER;
    }
}

}  // namespace

extern "C" {

cutvor_status cutvor_graph_from_json(const char* json, cutvor_graph** out) {
    if (!json || !out) {
        g_last_error = "null argument";
        return CUTVOR_ERR_OTHER;
    }
    *out = nullptr;
    try {
        auto gd = parse_graph_json(json);
        *out = new cutvor_graph_s{std::move(gd)};
        g_last_error.clear();
        return CUTVOR_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return CUTVOR_ERR_PARSE;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return CUTVOR_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CUTVOR_ERR_OTHER;
    }
}

void cutvor_graph_free(cutvor_graph* g) { delete g; }

int cutvor_graph_vertex_count(const cutvor_graph* g) {
    return g ? g->data.g.vertex_count() : -1;
}

int cutvor_graph_edge_count(const cutvor_graph* g) {
    return g ? g->data.g.edge_count() : -1;
}

cutvor_status cutvor_analyze(const cutvor_graph* g, char** out_json) {
    if (!g) {
        g_last_error = "null graph";
        return CUTVOR_ERR_OTHER;
    }
    return wrap(out_json, [&] { return analyze_json(g->data); });
}

cutvor_status cutvor_faces(const cutvor_graph* g, const char* format, char** out) {
    if (!g) {
        g_last_error = "null graph";
        return CUTVOR_ERR_OTHER;
    }
    std::string fmt = format ? format : "json";
    return wrap(out, [&]() -> std::string {
        if (fmt == "json") return faces_json(g->data);
        if (fmt == "dot") return faces_dot(g->data);
        throw ParseError("faces format must be json or dot");
    });
}

cutvor_status cutvor_admissible(const cutvor_graph* g, const char* divisor1_json,
                                const char* divisor2_json, char** out_json) {
    if (!g || !divisor1_json || !divisor2_json) {
        g_last_error = "null argument";
        return CUTVOR_ERR_OTHER;
    }
    return wrap(out_json,
                [&] { return admissible_json(g->data, divisor1_json, divisor2_json); });
}

cutvor_status cutvor_tiles(const cutvor_graph* g, const char* format,
                           uint64_t samples, uint64_t seed, char** out) {
    if (!g) {
        g_last_error = "null graph";
        return CUTVOR_ERR_OTHER;
    }
    std::string fmt = format ? format : "json";
    return wrap(out, [&]() -> std::string {
        if (fmt == "json") return tiles_json(g->data, samples, seed);
        if (fmt == "dot") return tiles_dot(g->data);
        if (fmt == "svg") return render_svg(g->data);
        throw ParseError("tiles format must be json, dot or svg");
    });
}

cutvor_status cutvor_locate(const cutvor_graph* g, const char* point_json,
                            char** out_json) {
    if (!g || !point_json) {
        g_last_error = "null argument";
        return CUTVOR_ERR_OTHER;
    }
    return wrap(out_json, [&] { return locate_json(g->data, point_json); });
}

cutvor_status cutvor_render_svg(const cutvor_graph* g, char** out_svg) {
    if (!g) {
        g_last_error = "null graph";
        return CUTVOR_ERR_OTHER;
    }
    return wrap(out_svg, [&] { return render_svg(g->data); });
}

const char* cutvor_last_error(void) { return g_last_error.c_str(); }

void cutvor_string_free(char* s) { std::free(s); }

}  // extern "C"
