#include "io.hpp"

#include <json.hpp>

#include <cmath>
#include <random>
#include <sstream>

namespace cutvor {

using nlohmann::json;

namespace {

json rat_to_json(const Rat& r) {
    if (denominator(r) == 1 && numerator(r) >= INT64_C(-9007199254740992) &&
        numerator(r) <= INT64_C(9007199254740992))
        return json(numerator(r).convert_to<std::int64_t>());
    return json(rat_str(r));
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw ParseError("expected a rational (integer or \"p/q\" string)");
}

json cochain1_to_json(const Cochain1& c) {
    json a = json::array();
    for (int k = 0; k < c.size(); ++k) a.push_back(rat_to_json(c[k]));
    return a;
}

json cochain0_to_json(const Cochain0& c) {
    json a = json::array();
    for (int v = 0; v < c.size(); ++v) a.push_back(rat_to_json(c[v]));
    return a;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

}  // namespace

GraphData parse_graph_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer())
        throw ParseError("\"vertices\" must be an integer");
    int n = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair [u, v]");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    Multigraph g(n, edges);
    std::vector<Int> ell(edges.size(), 1);
    if (j.contains("lengths")) {
        auto& l = j["lengths"];
        if (!l.is_array() || l.size() != edges.size())
            throw ParseError("\"lengths\" must list one integer per edge");
        for (size_t k = 0; k < edges.size(); ++k) ell[k] = l[k].get<Int>();
    }
    std::vector<Int> tw(edges.size(), 0);
    if (j.contains("twist")) {
        auto& t = j["twist"];
        if (!t.is_array() || t.size() != edges.size())
            throw ParseError("\"twist\" must list one integer per edge");
        for (size_t k = 0; k < edges.size(); ++k) tw[k] = t[k].get<Int>();
    }
    return GraphData{std::move(g), LengthFunction(std::move(ell)), TwistC1(std::move(tw))};
}

std::string graph_to_json(const GraphData& gd) {
    json j;
    j["vertices"] = gd.g.vertex_count();
    json edges = json::array();
    for (auto& [u, v] : gd.g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    j["lengths"] = gd.ell.ell;
    j["twist"] = gd.tw.m;
    return j.dump(2) + "\n";
}

Divisor parse_divisor_json(const std::string& text,
                           std::shared_ptr<const Subdivision> host) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("divisor JSON must be an object");
    std::vector<Int> c(host->h_vertex_count(), 0);
    if (j.contains("on_G")) {
        for (auto& [key, val] : j["on_G"].items()) {
            int v;
            try {
                v = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError("divisor vertex key is not an integer: " + key);
            }
            if (v < 0 || v >= host->base().vertex_count())
                throw ParseError("divisor vertex out of range: " + key);
            c[v] = val.get<Int>();
        }
    }
    if (j.contains("interior")) {
        for (auto& item : j["interior"]) {
            int k = item.at("edge").get<int>();
            if (k < 0 || k >= host->base().edge_count())
                throw ParseError("divisor edge index out of range");
            std::string dir = item.value("dir", "+");
            Int jj = item.at("j").get<Int>();
            if (jj < 1 || jj >= host->lengths()[k])
                throw ParseError("divisor interior position out of range");
            c[host->x(k, dir == "+", jj)] += item.at("coeff").get<Int>();
        }
    }
    return Divisor(std::move(host), std::move(c));
}

std::string divisor_to_json(const Divisor& d) {
    const Subdivision& s = d.host();
    json on_g = json::object();
    for (int v = 0; v < s.base().vertex_count(); ++v)
        if (d[v] != 0) on_g[std::to_string(v)] = d[v];
    json interior = json::array();
    for (int w = s.base().vertex_count(); w < s.h_vertex_count(); ++w) {
        if (d[w] == 0) continue;
        auto [k, jj] = s.interior_of(w);
        interior.push_back(json{{"edge", k}, {"dir", "+"}, {"j", jj}, {"coeff", d[w]}});
    }
    json j{{"on_G", on_g}, {"interior", interior}};
    return j.dump(2) + "\n";
}

Cochain0 parse_point_json(const std::string& text, int vertex_count) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("point") || !j["point"].is_array())
        throw ParseError("point JSON needs a \"point\" array");
    if ((int)j["point"].size() != vertex_count)
        throw ParseError("point length does not match the vertex count");
    Cochain0 p(vertex_count);
    for (int v = 0; v < vertex_count; ++v) p[v] = rat_from_json(j["point"][v]);
    return p;
}

std::string analyze_json(const GraphData& gd) {
    const Multigraph& g = gd.g;
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["spanning_trees"] = rat_to_json(Rat(spanning_tree_count(g)));
    // Gram matrix of q on the basis Delta(chi_v), v != 0: the reduced
    // Laplacian itself.
    json gram = json::array();
    for (int u = 1; u < g.vertex_count(); ++u) {
        json row = json::array();
        for (int v = 1; v < g.vertex_count(); ++v) {
            Int val = 0;
            for (int k = 0; k < g.edge_count(); ++k) {
                int a = g.tail(k), b = g.head(k);
                if (u == v && (a == u || b == u)) val += 1;
                if (u != v && ((a == u && b == v) || (a == v && b == u))) val -= 1;
            }
            row.push_back(val);
        }
        gram.push_back(row);
    }
    j["q_gram"] = gram;
    auto bonds = enumerate_bonds(g);
    json jb = json::array();
    for (auto& b : bonds)
        jb.push_back(json{{"S", b.side}, {"beta", cochain1_to_json(b.beta)}});
    j["bonds"] = jb;
    j["bond_count"] = bonds.size();
    return j.dump(2) + "\n";
}

namespace {

json face_poset_core(const GraphData& gd, FacePoset& fp) {
    fp = face_poset(gd.g);
    auto cacs = enumerate_cac(gd.g);
    json j;
    j["cac"] = cacs.size();
    j["faces"] = fp.faces.size();
    j["isomorphic"] = fp.isomorphic();
    j["checks"] = {{"vertex_sets_distinct", fp.vertex_sets_distinct},
                   {"order_isomorphic", fp.order_isomorphic},
                   {"phi_inverts", fp.phi_inverts}};
    // f-vector by dimension ascending (dim = |V|-1 - codim)
    int dim = gd.g.vertex_count() - 1;
    std::vector<int> fv(dim + 1, 0);
    for (auto& f : fp.faces) fv[dim - f.codim]++;
    j["f_vector"] = fv;
    json pts = json::object();
    for (int i = 0; i < (int)fp.points.size(); ++i)
        pts[std::to_string(i)] = cochain1_to_json(fp.points[i]);
    j["vertices"] = pts;
    json faces = json::object();
    for (auto& f : fp.faces) {
        json bonds = json::array();
        for (auto& b : f.bonds_through) bonds.push_back(cochain1_to_json(b));
        faces[f.cao.key()] = json{{"codim", f.codim},
                                  {"vertices", f.vertex_ids},
                                  {"bonds_through", bonds}};
    }
    j["poset"] = faces;
    return j;
}

}  // namespace

std::string faces_json(const GraphData& gd) {
    FacePoset fp;
    json j = face_poset_core(gd, fp);
    return j.dump(2) + "\n";
}

std::string faces_dot(const GraphData& gd) {
    FacePoset fp = face_poset(gd.g);
    // Hasse diagram: cover relations of the inclusion order.
    auto leq = [&](const Face& a, const Face& b) {  // a subseteq b
        return std::includes(b.vertex_ids.begin(), b.vertex_ids.end(),
                             a.vertex_ids.begin(), a.vertex_ids.end());
    };
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (auto& f : fp.faces)
        out << "  \"" << f.cao.key() << "\" [label=\"" << f.cao.key() << "\\ncodim "
            << f.codim << "\"];\n";
    for (size_t i = 0; i < fp.faces.size(); ++i)
        for (size_t j = 0; j < fp.faces.size(); ++j) {
            if (i == j || !leq(fp.faces[i], fp.faces[j])) continue;
            if (fp.faces[i].vertex_ids == fp.faces[j].vertex_ids) continue;
            bool cover = true;
            for (size_t k = 0; k < fp.faces.size() && cover; ++k) {
                if (k == i || k == j) continue;
                if (leq(fp.faces[i], fp.faces[k]) && leq(fp.faces[k], fp.faces[j]) &&
                    fp.faces[k].vertex_ids != fp.faces[i].vertex_ids &&
                    fp.faces[k].vertex_ids != fp.faces[j].vertex_ids)
                    cover = false;
            }
            if (cover)
                out << "  \"" << fp.faces[i].cao.key() << "\" -> \""
                    << fp.faces[j].cao.key() << "\";\n";
        }
    out << "}\n";
    return out.str();
}

std::string admissible_json(const GraphData& gd, const std::string& d1_json,
                            const std::string& d2_json) {
    auto host = std::make_shared<const Subdivision>(gd.g, gd.ell);
    Divisor d1 = parse_divisor_json(d1_json, host);
    Divisor d2 = parse_divisor_json(d2_json, host);
    json j;
    j["admissible"] = json::array({is_g_admissible(d1), is_g_admissible(d2)});
    j["degree"] = json::array({d1.degree(), d2.degree()});
    if (!is_g_admissible(d1) || !is_g_admissible(d2)) {
        j["equivalent"] = nullptr;
        return j.dump(2) + "\n";
    }
    auto f = solve_equivalence(d1, d2);
    j["equivalent"] = f.has_value();
    if (f) {
        json jf = json::object();
        for (int v = 0; v < (int)f->size(); ++v) jf[std::to_string(v)] = (*f)[v];
        j["f"] = jf;
        j["firing_sequence"] = *firing_sequence(d1, d2);
    } else {
        j["f"] = nullptr;
        j["firing_sequence"] = nullptr;
    }
    return j.dump(2) + "\n";
}

namespace {

json tiling_to_json(const GraphData& gd, const Tiling& tiling) {
    json j;
    j["period"] = tiling.period;
    json tiles = json::array();
    for (int ti = 0; ti < (int)tiling.tiles.size(); ++ti) {
        const auto& t = tiling.tiles[ti];
        json jt;
        jt["key"] = t.key();
        jt["f"] = t.f;
        jt["dm"] = cochain1_to_json(t.dm);
        json sub = json::array();
        for (int k = 0; k < gd.g.edge_count(); ++k)
            if (t.sub_edges[k]) sub.push_back(k);
        jt["subgraph_edges"] = sub;
        jt["center"] = cochain0_to_json(t.center);
        json nbrs = json::array();
        for (auto& r : tiling.neighbors[ti]) {
            nbrs.push_back(json{{"S", r.side},
                                {"n", r.n},
                                {"eta", cochain1_to_json(r.eta)},
                                {"neighbor", tiling.tiles[r.neighbor].key()},
                                {"shift", r.shift}});
        }
        jt["neighbors"] = nbrs;
        tiles.push_back(jt);
    }
    j["tiles"] = tiles;
    return j;
}

Cochain0 sample_point(const Multigraph& g, const LengthFunction& ell,
                      std::mt19937_64& rng) {
    const Int den = 1 << 20;
    std::uniform_int_distribution<Int> dist(0, den - 1);
    Cochain0 p(g.vertex_count());
    for (int v = 1; v < g.vertex_count(); ++v) {
        Rat tv(dist(rng), den);
        Cochain0 b = period_basis_vector(g, ell, v);
        for (int w = 0; w < g.vertex_count(); ++w) p[w] += tv * b[w];
    }
    return p;
}

}  // namespace

std::string tiles_json(const GraphData& gd, std::uint64_t samples, std::uint64_t seed) {
    Tiling tiling = enumerate_tiling(gd.g, gd.ell, gd.tw);
    json j = tiling_to_json(gd, tiling);
    if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::uint64_t covered = 0, strict_violations = 0;
        for (std::uint64_t i = 0; i < samples; ++i) {
            Cochain0 p = sample_point(gd.g, gd.ell, rng);
            auto hits = locate_point(gd.g, gd.ell, gd.tw, tiling, p, 2);
            if (!hits.empty()) ++covered;
            int strict = 0;
            for (auto& h : hits) strict += h.strict;
            if (strict > 1) ++strict_violations;
        }
        j["coverage"] = json{{"samples", samples},
                             {"covered", covered},
                             {"strict_multiplicity_violations", strict_violations}};
    }
    return j.dump(2) + "\n";
}

std::string tiles_dot(const GraphData& gd) {
    Tiling tiling = enumerate_tiling(gd.g, gd.ell, gd.tw);
    std::ostringstream out;
    out << "graph dual_skeleton {\n";
    for (auto& t : tiling.tiles) out << "  \"" << t.key() << "\";\n";
    // each facet appears once from each side; emit each undirected edge once
    for (int ti = 0; ti < (int)tiling.tiles.size(); ++ti)
        for (auto& r : tiling.neighbors[ti]) {
            bool shifted = false;
            for (Int s : r.shift) shifted |= s != 0;
            if (r.neighbor < ti && !shifted) continue;  // already emitted
            out << "  \"" << tiling.tiles[ti].key() << "\" -- \""
                << tiling.tiles[r.neighbor].key() << "\"";
            if (shifted) {
                out << " [label=\"shift ";
                for (size_t i = 0; i < r.shift.size(); ++i)
                    out << (i ? "," : "") << r.shift[i];
                out << "\"]";
            }
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string locate_json(const GraphData& gd, const std::string& point_json) {
    Cochain0 p = parse_point_json(point_json, gd.g.vertex_count());
    if (p.sum() != 0)
        throw DomainError("locate requires a point with coordinate sum zero");
    Tiling tiling = enumerate_tiling(gd.g, gd.ell, gd.tw);
    auto hits = locate_point(gd.g, gd.ell, gd.tw, tiling, p, 2);
    json j;
    j["point"] = cochain0_to_json(p);
    j["contained"] = !hits.empty();
    json jh = json::array();
    for (auto& h : hits)
        jh.push_back(json{{"tile", tiling.tiles[h.tile].key()},
                          {"shift", h.shift},
                          {"strict", h.strict}});
    j["hits"] = jh;
    return j.dump(2) + "\n";
}

std::string render_svg(const GraphData& gd) {
    const Multigraph& g = gd.g;
    if (g.vertex_count() != 3)
        throw DomainError("render requires a graph with exactly 3 vertices");
    Tiling tiling = enumerate_tiling(g, gd.ell, gd.tw);

    // q-isometric plane chart: p = c1 b1 + c2 b2 with b_v = e_v - e_0 and
    // c_v = p(v); screen coords via the Cholesky factor of the q-Gram.
    auto qgram = [&](int u, int v) {
        Cochain0 bu(3), bv(3);
        bu[0] = -1;
        bu[u] = bu[u] + 1;
        bv[0] = -1;
        bv[v] = bv[v] + 1;
        Cochain0 gu = laplacian_solve(g, bu);
        return inner0(gu, bv);
    };
    double m11 = (double)qgram(1, 1).convert_to<double>();
    double m12 = (double)qgram(1, 2).convert_to<double>();
    double m22 = (double)qgram(2, 2).convert_to<double>();
    double l11 = std::sqrt(m11), l21 = m12 / l11,
           l22 = std::sqrt(std::max(0.0, m22 - l21 * l21));
    auto to_xy = [&](const Cochain0& p) {
        double c1 = p[1].convert_to<double>(), c2 = p[2].convert_to<double>();
        return std::pair<double, double>{100.0 * (c1 * l11 + c2 * l21),
                                         100.0 * (c2 * l22)};
    };

    // Vertices of each tile: center + d*(nu^D) over total acyclic
    // orientations D of the tile's subgraph.
    struct Poly {
        std::vector<std::pair<double, double>> pts;
        std::string color;
    };
    std::vector<Poly> polys;
    std::vector<Cochain0> basis{period_basis_vector(g, gd.ell, 1),
                                period_basis_vector(g, gd.ell, 2)};
    for (auto& t : tiling.tiles) {
        std::vector<std::pair<int, int>> sub_edges;
        for (int k = 0; k < g.edge_count(); ++k)
            if (t.sub_edges[k]) sub_edges.push_back({g.tail(k), g.head(k)});
        Multigraph sub(3, sub_edges);
        std::vector<Cochain0> corners;
        for (auto& cao : enumerate_cac(sub)) {
            if (!cao.orients_all()) continue;
            Cochain0 w = adjoint(sub, face_vertex(sub, cao));
            corners.push_back(t.center + w);
        }
        // order around the centroid, exactly in the (c1, c2) chart
        Cochain0 cen = t.center;
        std::sort(corners.begin(), corners.end(),
                  [&](const Cochain0& a, const Cochain0& b) {
                      Rat ax = a[1] - cen[1], ay = a[2] - cen[2];
                      Rat bx = b[1] - cen[1], by = b[2] - cen[2];
                      int ha = (ay < 0 || (ay == 0 && ax < 0)) ? 1 : 0;
                      int hb = (by < 0 || (by == 0 && bx < 0)) ? 1 : 0;
                      if (ha != hb) return ha < hb;
                      return ax * by - ay * bx > 0;
                  });
        // deterministic color from the subgraph mask
        unsigned hash = 2166136261u;
        for (int k = 0; k < g.edge_count(); ++k)
            hash = (hash ^ (t.sub_edges[k] + 1)) * 16777619u;
        char color[24];
        std::snprintf(color, sizeof color, "hsl(%u,62%%,72%%)", hash % 360);

        for (int s1 = -1; s1 <= 1; ++s1)
            for (int s2 = -1; s2 <= 1; ++s2) {
                Poly poly;
                poly.color = color;
                for (auto& c : corners) {
                    Cochain0 q = c;
                    for (int v = 0; v < 3; ++v)
                        q[v] += Rat(s1) * basis[0][v] + Rat(s2) * basis[1][v];
                    poly.pts.push_back(to_xy(q));
                }
                polys.push_back(std::move(poly));
            }
    }

    double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
    for (auto& p : polys)
        for (auto& [x, y] : p.pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - 10 << " "
        << ymin - 10 << " " << (xmax - xmin + 20) << " " << (ymax - ymin + 20)
        << "\">\n";
    for (auto& p : polys) {
        out << "  <polygon points=\"";
        for (size_t i = 0; i < p.pts.size(); ++i) {
            // SVG y axis points down
            out << (i ? " " : "") << p.pts[i].first << ","
                << (ymin + ymax - p.pts[i].second);
        }
        out << "\" fill=\"" << p.color << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace cutvor
