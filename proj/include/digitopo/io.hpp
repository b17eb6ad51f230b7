#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "map_homotopy.hpp"

#ifndef DIGITOPO_FIXTURE_DIR
#define DIGITOPO_FIXTURE_DIR "fixtures"
#endif

namespace digitopo::io {

namespace fs = std::filesystem;

inline Error parse_error(const std::string& what) { return Error(Error::Kind::parse, what); }

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Non-empty lines with comments (#...) removed.
inline std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

inline Coord parse_int(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw parse_error("empty integer");
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw parse_error("bad integer '" + t + "'");
    }
    if (used != t.size()) throw parse_error("bad integer '" + t + "'");
    return static_cast<Coord>(v);
}

inline Point parse_point(const std::string& s) {
    Point p;
    for (const auto& part : split(trim(s), ',')) p.push_back(parse_int(part));
    return p;
}

inline std::vector<Point> parse_point_list(const std::string& s, char sep = ';') {
    std::vector<Point> out;
    if (trim(s).empty()) return out;
    for (const auto& part : split(s, sep)) out.push_back(parse_point(part));
    return out;
}

inline std::string join_points_text(const std::vector<Point>& pts, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += sep;
        out += to_string(pts[i]);
    }
    return out;
}

// key=value tokens separated by spaces.
inline std::map<std::string, std::string> parse_header(const std::string& line) {
    std::map<std::string, std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw parse_error("expected key=value, got '" + tok + "'");
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

inline std::string require_key(const std::map<std::string, std::string>& h, const std::string& key) {
    auto it = h.find(key);
    if (it == h.end()) throw parse_error("missing '" + key + "'");
    return it->second;
}

inline std::optional<std::string> prefixed(const std::string& line, const std::string& key) {
    if (line.rfind(key + "=", 0) == 0) return trim(line.substr(key.size() + 1));
    return std::nullopt;
}

inline std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw parse_error("cannot open " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline fs::path fixture_dir() {
    if (const char* env = std::getenv("DIGITOPO_FIXTURES"); env && *env) return fs::path(env);
    return fs::path(DIGITOPO_FIXTURE_DIR);
}

// ---- images ----

inline DigitalImage parse_image(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error("empty image file");
    auto dim_s = prefixed(lines[0], "dim");
    if (!dim_s) throw parse_error("image file must start with dim=<n>");
    Coord dim = parse_int(*dim_s);
    if (dim < 1) throw parse_error("dimension must be positive");
    std::size_t i = 1;
    std::optional<Point> base;
    if (i < lines.size()) {
        if (auto b = prefixed(lines[i], "basepoint")) {
            base = parse_point(*b);
            ++i;
        }
    }
    std::vector<Point> pts;
    for (; i < lines.size(); ++i) {
        Point p = parse_point(lines[i]);
        if (p.size() != static_cast<std::size_t>(dim)) throw parse_error("point '" + lines[i] + "' has the wrong dimension");
        pts.push_back(p);
    }
    if (base && base->size() != static_cast<std::size_t>(dim)) throw parse_error("basepoint has the wrong dimension");
    return DigitalImage(static_cast<std::size_t>(dim), std::move(pts), base);
}

inline std::string serialize_image(const DigitalImage& X) {
    std::string out = "dim=" + std::to_string(X.dim()) + "\n";
    if (X.based()) out += "basepoint=" + to_string(*X.basepoint()) + "\n";
    for (const auto& p : X.points()) out += to_string(p) + "\n";
    return out;
}

// inline[<dim>|<basepoint or empty>|p;p;...]
inline std::string inline_ref(const DigitalImage& X) {
    return "inline[" + std::to_string(X.dim()) + "|" + (X.based() ? to_string(*X.basepoint()) : "") + "|" +
           join_points_text(X.points()) + "]";
}

namespace detail {
// Splits "a,b,c" at top-level commas only.
inline std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}
}  // namespace detail

// Image references: @name (fixture), interval(N), subdivide(REF,k[,origin]),
// product(REF,REF), inline[...], or a file path relative to base_dir.
inline DigitalImage resolve_image(const std::string& ref_in, const fs::path& base_dir) {
    std::string ref = trim(ref_in);
    if (ref.empty()) throw parse_error("empty image reference");
    if (ref[0] == '@') return parse_image(read_file(fixture_dir() / (ref.substr(1) + ".img")));
    auto call = [&](const std::string& name) -> std::optional<std::vector<std::string>> {
        if (ref.rfind(name + "(", 0) == 0 && ref.back() == ')')
            return detail::split_args(ref.substr(name.size() + 1, ref.size() - name.size() - 2));
        return std::nullopt;
    };
    if (auto a = call("interval")) {
        if (a->size() != 1) throw parse_error("interval(N) takes one argument");
        return interval(parse_int((*a)[0]));
    }
    if (auto a = call("subdivide")) {
        if (a->size() < 2 || a->size() > 3) throw parse_error("subdivide(REF,k[,origin]) arity");
        BasepointRule rule = BasepointRule::centre;
        if (a->size() == 3) {
            if ((*a)[2] != "origin") throw parse_error("unknown basepoint rule '" + (*a)[2] + "'");
            rule = BasepointRule::block_origin;
        }
        return subdivide(resolve_image((*a)[0], base_dir), static_cast<int>(parse_int((*a)[1])), rule);
    }
    if (auto a = call("product")) {
        if (a->size() != 2) throw parse_error("product(REF,REF) takes two arguments");
        return product(resolve_image((*a)[0], base_dir), resolve_image((*a)[1], base_dir));
    }
    if (ref.rfind("inline[", 0) == 0 && ref.back() == ']') {
        auto parts = split(ref.substr(7, ref.size() - 8), '|');
        if (parts.size() != 3) throw parse_error("inline image needs dim|basepoint|points");
        std::optional<Point> base;
        if (!trim(parts[1]).empty()) base = parse_point(parts[1]);
        return DigitalImage(static_cast<std::size_t>(parse_int(parts[0])), parse_point_list(parts[2]), base);
    }
    fs::path p = ref;
    if (p.is_relative()) p = base_dir / p;
    return parse_image(read_file(p));
}

// ---- paths and loops ----

struct PathFile {
    std::string image_ref;
    DigitalImage image;
    LatticePath path;
};

inline PathFile parse_path_file(const std::string& text, const fs::path& base_dir) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error("empty path file");
    auto ref = prefixed(lines[0], "image");
    if (!ref) throw parse_error("path file must start with image=<ref>");
    PathFile f{*ref, resolve_image(*ref, base_dir), {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Point p = parse_point(lines[i]);
        if (p.size() != f.image.dim()) throw parse_error("point '" + lines[i] + "' has the wrong dimension");
        f.path.steps.push_back(std::move(p));
    }
    if (f.path.steps.empty()) throw parse_error("path file has no points");
    return f;
}

inline std::string serialize_path(const std::string& image_ref, const LatticePath& a) {
    std::string out = "image=" + image_ref + "\n";
    for (const auto& p : a.steps) out += to_string(p) + "\n";
    return out;
}

// ---- maps ----

struct MapFile {
    std::string domain_ref, codomain_ref;
    DigitalMap map;
};

inline MapFile parse_map_file(const std::string& text, const fs::path& base_dir) {
    auto lines = content_lines(text);
    if (lines.size() < 2) throw parse_error("map file needs domain= and codomain= lines");
    auto d = prefixed(lines[0], "domain");
    auto c = prefixed(lines[1], "codomain");
    if (!d || !c) throw parse_error("map file must start with domain=<ref> and codomain=<ref>");
    DigitalImage dom = resolve_image(*d, base_dir), cod = resolve_image(*c, base_dir);
    std::map<Point, Point> table;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        auto arrow = lines[i].find("->");
        if (arrow == std::string::npos) throw parse_error("expected 'x -> y', got '" + lines[i] + "'");
        Point x = parse_point(lines[i].substr(0, arrow)), y = parse_point(lines[i].substr(arrow + 2));
        if (!table.emplace(x, y).second) throw parse_error("map assigns (" + to_string(x) + ") twice");
    }
    return MapFile{*d, *c, DigitalMap::from_table(dom, cod, table)};
}

inline std::string serialize_map(const std::string& domain_ref, const std::string& codomain_ref, const DigitalMap& f) {
    std::string out = "domain=" + domain_ref + "\ncodomain=" + codomain_ref + "\n";
    for (std::size_t i = 0; i < f.domain().size(); ++i) out += to_string(f.domain().point(i)) + " -> " + to_string(f.at_index(i)) + "\n";
    return out;
}

// ---- grids ----

inline GridKind parse_kind(const std::string& s) {
    if (s == "of-maps") return GridKind::maps;
    if (s == "of-based-loops") return GridKind::based_loops;
    if (s == "rel-endpoints") return GridKind::rel_endpoints;
    throw parse_error("unknown grid kind '" + s + "'");
}

namespace detail {
inline HomotopyGrid parse_grid_body(const std::vector<std::string>& lines, std::size_t& i, const DigitalImage& target) {
    if (i >= lines.size()) throw parse_error("missing grid header");
    auto h = parse_header(lines[i++]);
    Coord W = parse_int(require_key(h, "width")), N = parse_int(require_key(h, "height"));
    if (W < 0 || N < 0) throw parse_error("negative grid size");
    HomotopyGrid G;
    G.target = target;
    G.kind = parse_kind(require_key(h, "kind"));
    for (Coord t = 0; t <= N; ++t) {
        if (i >= lines.size()) throw parse_error("grid has too few rows");
        auto row = parse_point_list(lines[i++]);
        if (row.size() != static_cast<std::size_t>(W + 1)) throw parse_error("grid row " + std::to_string(t) + " has the wrong width");
        for (const auto& p : row)
            if (p.size() != target.dim()) throw parse_error("grid value has the wrong dimension");
        G.rows.push_back(std::move(row));
    }
    return G;
}

inline std::string serialize_grid_body(const HomotopyGrid& G) {
    std::string out = "width=" + std::to_string(G.width()) + " height=" + std::to_string(G.height()) +
                      " kind=" + kind_name(G.kind) + "\n";
    for (const auto& r : G.rows) out += join_points_text(r) + "\n";
    return out;
}
}  // namespace detail

struct GridFile {
    std::string image_ref;
    HomotopyGrid grid;
};

inline GridFile parse_grid_file(const std::string& text, const fs::path& base_dir) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error("empty grid file");
    auto ref = prefixed(lines[0], "image");
    if (!ref) throw parse_error("grid file must start with image=<ref>");
    std::size_t i = 1;
    GridFile f{*ref, detail::parse_grid_body(lines, i, resolve_image(*ref, base_dir))};
    if (i != lines.size()) throw parse_error("trailing lines after the grid");
    return f;
}

inline std::string serialize_grid(const std::string& image_ref, const HomotopyGrid& G) {
    return "image=" + image_ref + "\n" + detail::serialize_grid_body(G);
}

// ---- equivalence witnesses ----

struct WitnessFile {
    std::string image_ref;
    EquivalenceWitness witness;
};

inline WitnessFile parse_witness_file(const std::string& text, const fs::path& base_dir) {
    auto lines = content_lines(text);
    if (lines.size() < 5) throw parse_error("witness file too short");
    auto ref = prefixed(lines[0], "image");
    auto left = prefixed(lines[1], "left");
    auto right = prefixed(lines[2], "right");
    auto factors = prefixed(lines[3], "factors");
    auto count = prefixed(lines[4], "grids");
    if (!ref || !left || !right || !factors || !count)
        throw parse_error("witness file needs image=, left=, right=, factors=, grids= lines in that order");
    WitnessFile f;
    f.image_ref = *ref;
    f.witness.target = resolve_image(*ref, base_dir);
    f.witness.left = LatticePath(parse_point_list(*left));
    f.witness.right = LatticePath(parse_point_list(*right));
    auto fs_ = split(*factors, ',');
    if (fs_.size() != 2) throw parse_error("factors=k,l");
    f.witness.left_factor = static_cast<int>(parse_int(fs_[0]));
    f.witness.right_factor = static_cast<int>(parse_int(fs_[1]));
    Coord n = parse_int(*count);
    std::size_t i = 5;
    for (Coord g = 0; g < n; ++g) f.witness.grids.push_back(detail::parse_grid_body(lines, i, f.witness.target));
    if (i != lines.size()) throw parse_error("trailing lines after the last grid");
    return f;
}

inline std::string serialize_witness(const std::string& image_ref, const EquivalenceWitness& w) {
    std::string out = "image=" + image_ref + "\n";
    out += "left=" + join_points_text(w.left.steps) + "\n";
    out += "right=" + join_points_text(w.right.steps) + "\n";
    out += "factors=" + std::to_string(w.left_factor) + "," + std::to_string(w.right_factor) + "\n";
    out += "grids=" + std::to_string(w.grids.size()) + "\n";
    for (const auto& g : w.grids) out += detail::serialize_grid_body(g);
    return out;
}

// ---- map homotopies ----

struct MapHomotopyFile {
    std::string domain_ref, codomain_ref;
    MapHomotopy homotopy;
};

inline MapHomotopyFile parse_map_homotopy_file(const std::string& text, const fs::path& base_dir) {
    auto lines = content_lines(text);
    if (lines.size() < 3) throw parse_error("map homotopy file too short");
    auto d = prefixed(lines[0], "domain");
    auto c = prefixed(lines[1], "codomain");
    if (!d || !c) throw parse_error("map homotopy file must start with domain= and codomain=");
    auto h = parse_header(lines[2]);
    Coord N = parse_int(require_key(h, "height"));
    bool based = require_key(h, "based") == "1";
    MapHomotopyFile f{*d, *c, MapHomotopy{resolve_image(*d, base_dir), resolve_image(*c, base_dir), {}, based}};
    const auto& X = f.homotopy.domain;
    f.homotopy.stages.assign(static_cast<std::size_t>(N + 1), std::vector<Point>(X.size()));
    std::vector<bool> seen(X.size(), false);
    for (std::size_t i = 3; i < lines.size(); ++i) {
        auto arrow = lines[i].find("->");
        if (arrow == std::string::npos) throw parse_error("expected 'x -> y0;y1;...', got '" + lines[i] + "'");
        Point x = parse_point(lines[i].substr(0, arrow));
        auto ys = parse_point_list(lines[i].substr(arrow + 2));
        if (ys.size() != static_cast<std::size_t>(N + 1)) throw parse_error("wrong number of stages for (" + to_string(x) + ")");
        auto idx = X.index_of(x);
        if (!idx) throw parse_error("(" + to_string(x) + ") is not in the domain");
        if (seen[*idx]) throw parse_error("(" + to_string(x) + ") listed twice");
        seen[*idx] = true;
        for (Coord t = 0; t <= N; ++t) f.homotopy.stages[static_cast<std::size_t>(t)][*idx] = ys[static_cast<std::size_t>(t)];
    }
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!seen[i]) throw parse_error("homotopy undefined at (" + to_string(X.point(i)) + ")");
    return f;
}

inline std::string serialize_map_homotopy(const std::string& domain_ref, const std::string& codomain_ref, const MapHomotopy& H) {
    std::string out = "domain=" + domain_ref + "\ncodomain=" + codomain_ref + "\n";
    out += "height=" + std::to_string(H.height()) + " based=" + (H.based ? "1" : "0") + "\n";
    for (std::size_t i = 0; i < H.domain.size(); ++i) {
        std::vector<Point> ys;
        for (const auto& st : H.stages) ys.push_back(st[i]);
        out += to_string(H.domain.point(i)) + " -> " + join_points_text(ys) + "\n";
    }
    return out;
}

// ---- file helpers ----

inline DigitalImage load_image(const fs::path& p) { return parse_image(read_file(p)); }
inline PathFile load_path(const fs::path& p) { return parse_path_file(read_file(p), p.parent_path()); }
inline MapFile load_map(const fs::path& p) { return parse_map_file(read_file(p), p.parent_path()); }
inline GridFile load_grid(const fs::path& p) { return parse_grid_file(read_file(p), p.parent_path()); }
inline WitnessFile load_witness(const fs::path& p) { return parse_witness_file(read_file(p), p.parent_path()); }
inline MapHomotopyFile load_map_homotopy(const fs::path& p) { return parse_map_homotopy_file(read_file(p), p.parent_path()); }

inline DigitalImage fixture_image(const std::string& name) { return load_image(fixture_dir() / (name + ".img")); }
inline MapFile fixture_map(const std::string& name) { return load_map(fixture_dir() / (name + ".map")); }
inline PathFile fixture_loop(const std::string& name) { return load_path(fixture_dir() / (name + ".loop")); }
inline MapHomotopyFile fixture_map_homotopy(const std::string& name) { return load_map_homotopy(fixture_dir() / (name + ".mhom")); }

}  // namespace digitopo::io
