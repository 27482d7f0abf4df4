/* C interface to the cutvor library.
 *
 * All functions return a cutvor_status; outputs are heap strings released
 * with cutvor_string_free.  On failure the output pointer is left NULL and
 * cutvor_last_error() holds a message for the calling thread.
 */
#ifndef CUTVOR_H
#define CUTVOR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cutvor_graph_s cutvor_graph;

typedef enum cutvor_status {
    CUTVOR_OK = 0,
    CUTVOR_ERR_DOMAIN = 1, /* violated precondition (disconnected graph, ...) */
    CUTVOR_ERR_PARSE = 2,  /* malformed input */
    CUTVOR_ERR_OTHER = 3
} cutvor_status;

/* Graph JSON: {"vertices": n, "edges": [[u,v],...],
 *              "lengths": [l,...] (optional), "twist": [m,...] (optional)} */
cutvor_status cutvor_graph_from_json(const char* json, cutvor_graph** out);
void cutvor_graph_free(cutvor_graph* g);

int cutvor_graph_vertex_count(const cutvor_graph* g);
int cutvor_graph_edge_count(const cutvor_graph* g);

/* Lattice basics: spanning tree count, q Gram matrix, bond elements. */
cutvor_status cutvor_analyze(const cutvor_graph* g, char** out_json);

/* Face poset of the cut Voronoi cell; format "json" or "dot" (Hasse). */
cutvor_status cutvor_faces(const cutvor_graph* g, const char* format, char** out);

/* G-admissibility / equivalence / firing sequence for two divisor files. */
cutvor_status cutvor_admissible(const cutvor_graph* g, const char* divisor1_json,
                                const char* divisor2_json, char** out_json);

/* Mixed/twisted tiling with adjacency; format "json" or "dot" (dual
 * skeleton).  samples > 0 adds a seeded coverage self-check to the JSON. */
cutvor_status cutvor_tiles(const cutvor_graph* g, const char* format,
                           uint64_t samples, uint64_t seed, char** out);

/* Point location: {"point": ["p/q", ...]} with coordinate sum zero. */
cutvor_status cutvor_locate(const cutvor_graph* g, const char* point_json,
                            char** out_json);

/* SVG of one fundamental domain plus the 8 neighboring translates; the
 * graph must have exactly 3 vertices. */
cutvor_status cutvor_render_svg(const cutvor_graph* g, char** out_svg);

const char* cutvor_last_error(void);
void cutvor_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CUTVOR_H */
