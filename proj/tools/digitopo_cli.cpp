// Command-line front end. Exit codes: 0 ok, 1 verification failed, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "digitopo/digitopo.hpp"
#include "digitopo/suite.hpp"

using namespace digitopo;
namespace fs = std::filesystem;

namespace {

std::string out_path;

void emit(const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(out_path, std::ios::binary);
    if (!o) throw io::parse_error("cannot write " + out_path);
    o << text;
}

DigitalImage image_arg(const std::string& ref) { return io::resolve_image(ref, fs::current_path()); }

// A reference usable from the output file's location.
std::string carry_ref(const std::string& ref, const fs::path& from_file) {
    if (ref.empty() || ref[0] == '@' || ref.find('(') != std::string::npos || ref.rfind("inline[", 0) == 0) return ref;
    fs::path p = fs::path(ref);
    if (p.is_relative()) p = from_file.parent_path() / p;
    return fs::absolute(p).lexically_normal().string();
}

int cmd_check_map(const std::string& file) {
    auto mf = io::load_map(file);
    auto bad = check_continuity(mf.map);
    for (const auto& [x, y] : bad)
        std::cout << "discontinuous: (" << to_string(x) << ") ~ (" << to_string(y) << ") but (" << to_string(mf.map(x)) << ") !~ ("
                  << to_string(mf.map(y)) << ")\n";
    bool based = !mf.map.domain().based() || !mf.map.codomain().based() || is_based(mf.map);
    if (!based) std::cout << "not based\n";
    std::cout << (bad.empty() && based ? "continuous" : "not continuous") << (based ? ", based" : "") << "\n";
    return bad.empty() && based ? 0 : 1;
}

int cmd_subdivide(const std::string& ref, int k, bool origin) {
    DigitalImage X = image_arg(ref);
    emit(io::serialize_image(subdivide(X, k, origin ? BasepointRule::block_origin : BasepointRule::centre)));
    return 0;
}

int cmd_cover(const std::string& file, int factor) {
    if (factor < 1 || factor % 2 == 0) throw Error(Error::Kind::precondition, "cover factor must be odd");
    auto pf = io::load_path(file);
    auto bad = path_problems(pf.image, pf.path);
    if (!bad.empty()) throw Error(Error::Kind::precondition, "input is not a path: " + bad.front());
    LatticePath hat = standard_cover(pf.path, factor / 2);
    std::string ref = "subdivide(" + carry_ref(pf.image_ref, file) + "," + std::to_string(factor) + ")";
    emit(io::serialize_path(ref, hat));
    return 0;
}

int cmd_cover_homotopy(const std::string& file, int factor) {
    if (factor < 3 || factor % 2 == 0) throw Error(Error::Kind::precondition, "cover factor must be odd and at least 3");
    auto pf = io::load_path(file);
    require_loop(pf.image, pf.path);
    HomotopyGrid G = reparam_to_cover_grid(pf.image, pf.path, factor / 2);
    auto rep = verify_grid(G);
    emit(io::serialize_grid(carry_ref(pf.image_ref, file), G));
    std::cerr << "grid " << G.width() << "x" << G.height() << ": " << rep.summary() << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_make_homotopy(const std::string& kind, const std::vector<std::string>& args, int k, bool left, bool star, bool symmetric) {
    HomotopyGrid G;
    std::string ref;
    if (kind == "cube") {
        if (args.size() != 1) throw io::parse_error("make-homotopy cube <M>");
        Coord M = io::parse_int(args[0]);
        G = cube_contraction(M, symmetric ? CubeMode::symmetric : CubeMode::interval_0M);
        ref = symmetric ? io::inline_ref(G.target) : "interval(" + std::to_string(M) + ")";
    } else {
        if (args.size() != 1) throw io::parse_error("make-homotopy " + kind + " <path-file>");
        auto pf = io::load_path(args[0]);
        ref = carry_ref(pf.image_ref, args[0]);
        if (kind == "reparam") {
            G = reparam_homotopy(pf.image, pf.path, k, left ? Side::left : Side::right);
        } else if (kind == "inverse") {
            G = inverse_homotopy(pf.image, pf.path, star ? InverseForm::star : InverseForm::dot);
        } else if (kind == "null") {
            require_loop(pf.image, pf.path);
            if (as_full_box(pf.image))
                G = loop_through(box_contraction(pf.image), pf.path);
            else if (pf.image.same_points(diamond()))
                G = contract_winding_zero_loop(pf.path);
            else
                throw Error(Error::Kind::precondition, "null homotopies are built for boxes and winding-zero loops in D");
        } else {
            throw io::parse_error("unknown homotopy kind '" + kind + "' (reparam, inverse, cube, null)");
        }
    }
    emit(io::serialize_grid(ref, G));
    return 0;
}

int cmd_verify_grid(const std::string& file) {
    auto gf = io::load_grid(file);
    auto rep = verify_grid(gf.grid);
    for (const auto& v : rep.violations)
        std::cout << "violation: " << v.what << " at (" << v.s1 << "," << v.t1 << ")-(" << v.s2 << "," << v.t2 << ")\n";
    std::cout << kind_name(gf.grid.kind) << " grid " << gf.grid.width() << "x" << gf.grid.height() << ": " << rep.summary() << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_winding(const std::string& file) {
    auto pf = io::load_path(file);
    if (!pf.image.same_points(diamond())) throw Error(Error::Kind::precondition, "winding is defined for loops in D");
    require_loop(pf.image, pf.path);
    Coord w = winding(pf.path);
    std::cout << "w=" << w << " h=" << w / 4 << "\n";
    return 0;
}

int cmd_equiv(const std::string& fa, const std::string& fb, const SearchBudget& budget) {
    auto a = io::load_path(fa), b = io::load_path(fb);
    if (!a.image.same_points(b.image)) throw Error(Error::Kind::precondition, "loops live in different images");
    auto r = equivalent_bounded(a.image, a.path, b.path, budget, diamond_invariant(a.image));
    std::cout << verdict_name(r.verdict) << " (" << r.explored << " states";
    if (!r.note.empty()) std::cout << "; " << r.note;
    std::cout << ")\n";
    if (r.witness) {
        auto probs = verify_witness(*r.witness);
        std::cout << "witness factors " << r.witness->left_factor << "," << r.witness->right_factor << ": "
                  << (probs.empty() ? "verified" : probs.front()) << "\n";
        if (!out_path.empty()) emit(io::serialize_witness(carry_ref(a.image_ref, fa), *r.witness));
        return probs.empty() ? 0 : 1;
    }
    return 1;
}

int cmd_verify_witness(const std::string& file) {
    auto wf = io::load_witness(file);
    auto probs = verify_witness(wf.witness);
    for (const auto& p : probs) std::cout << "problem: " << p << "\n";
    std::cout << (probs.empty() ? "witness verified" : "witness rejected") << "\n";
    return probs.empty() ? 0 : 1;
}

int cmd_pi1(const std::string& ref, std::size_t max_len, const SearchBudget& budget) {
    DigitalImage X = image_arg(ref);
    ClassTable T = class_table(X, max_len, budget);
    std::size_t loops = 0;
    for (const auto& c : T.classes) loops += c.members.size();
    std::cout << loops << " based loops of length <= " << max_len << ", " << T.classes.size() << " classes";
    if (T.unresolved) std::cout << " (" << T.unresolved << " split without a separating invariant)";
    std::cout << "\n";
    for (std::size_t i = 0; i < T.classes.size(); ++i) {
        const auto& c = T.classes[i];
        std::cout << "class " << i << ": " << c.members.size() << " loops, representative " << io::join_points_text(c.representative.steps);
        if (c.invariant) std::cout << ", winding class " << *c.invariant;
        std::cout << "\n";
    }
    return 0;
}

int cmd_dc_example() {
    auto r = suite::criterion_circles();
    DigitalImage D = io::fixture_image("D"), C = io::fixture_image("C");
    auto census = based_map_census(D, C);
    std::cout << "based continuous maps D -> C: " << census.size() << ", all with image in {x1 >= 0}\n";
    std::cout << suite::format_line(r) << "\n";
    return r.passed ? 0 : 1;
}

int cmd_suite(const std::string& only) {
    std::set<int> ids;
    if (!only.empty())
        for (const auto& part : io::split(only, ',')) ids.insert(static_cast<int>(io::parse_int(part)));
    bool all = true;
    for (const auto& r : suite::run_all(ids)) {
        std::cout << suite::format_line(r) << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}

int cmd_render(const std::string& file) {
    std::string text = io::read_file(file);
    auto lines = io::content_lines(text);
    if (lines.empty()) throw io::parse_error("empty file");
    fs::path base = fs::path(file).parent_path();
    if (io::prefixed(lines[0], "dim")) {
        emit(svg::render_image(io::parse_image(text)));
    } else if (lines.size() > 1 && io::prefixed(lines[0], "image") && lines[1].rfind("width=", 0) == 0) {
        emit(svg::render_grid(io::parse_grid_file(text, base).grid));
    } else {
        auto pf = io::parse_path_file(text, base);
        emit(svg::render_image(pf.image, pf.path));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digital fundamental group toolkit"};
    app.require_subcommand(1);
    app.add_option("--out", out_path, "Write the primary output to this file");

    std::string file, file2, ref, kind, only;
    std::vector<std::string> rest;
    int k = 2;
    bool flag_origin = false, flag_left = false, flag_star = false, flag_sym = false;
    std::size_t max_len = 4;
    SearchBudget budget;

    auto* check_map = app.add_subcommand("check-map", "Check continuity and basedness of a map file");
    check_map->add_option("map", file)->required();

    auto* sub = app.add_subcommand("subdivide", "Print S(X,k)");
    sub->add_option("image", ref, "Image file or reference")->required();
    sub->add_option("k", k)->required()->check(CLI::PositiveNumber);
    sub->add_flag("--origin", flag_origin, "Base at k*x0 instead of the block centre");

    auto* cover = app.add_subcommand("cover", "Standard cover of a path at an odd factor");
    cover->add_option("path", file)->required();
    cover->add_option("factor", k)->required();

    auto* cover_h = app.add_subcommand("cover-homotopy", "Grid from a∘rho to the cover of rho∘a for a loop in S(X,2k+1)");
    cover_h->add_option("loop", file)->required();
    cover_h->add_option("factor", k)->required();

    auto* make_h = app.add_subcommand("make-homotopy", "Build a grid: reparam, inverse, cube or null");
    make_h->add_option("kind", kind)->required();
    make_h->add_option("args", rest);
    make_h->add_option("-k", k, "Reparametrization factor");
    make_h->add_flag("--left", flag_left, "Pad on the left");
    make_h->add_flag("--star", flag_star, "Use the shared-point concatenation");
    make_h->add_flag("--symmetric", flag_sym, "Contract [-M,M] instead of [0,M]");

    auto* vgrid = app.add_subcommand("verify-grid", "Verify a homotopy grid");
    vgrid->add_option("grid", file)->required();

    auto* wind = app.add_subcommand("winding", "Winding number of a loop in D");
    wind->add_option("loop", file)->required();

    auto* equiv = app.add_subcommand("equiv", "Bounded search for an equivalence witness");
    equiv->add_option("a", file)->required();
    equiv->add_option("b", file2)->required();
    equiv->add_option("--budget", budget.max_steps, "State budget");
    equiv->add_option("--max-factor", budget.max_factor, "Largest reparametrization factor");

    auto* vwit = app.add_subcommand("verify-witness", "Replay an equivalence witness file");
    vwit->add_option("witness", file)->required();

    auto* pi1 = app.add_subcommand("pi1", "Class table of short based loops");
    pi1->add_option("image", ref)->required();
    pi1->add_option("--max-len", max_len, "Longest loop enumerated");
    pi1->add_option("--budget", budget.max_steps, "State budget per comparison");

    auto* dc = app.add_subcommand("dc-example", "Check the two-circle example");

    auto* suite_cmd = app.add_subcommand("verify-paper-suite", "Run the acceptance criteria");
    suite_cmd->add_option("--only", only, "Comma-separated criterion numbers");

    auto* render = app.add_subcommand("render", "SVG of an image, path or grid file");
    render->add_option("file", file)->required();

    for (auto* s : {check_map, sub, cover, cover_h, make_h, vgrid, wind, equiv, vwit, pi1, dc, suite_cmd, render})
        s->add_option("--out", out_path, "Write the primary output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check_map) return cmd_check_map(file);
        if (*sub) return cmd_subdivide(ref, k, flag_origin);
        if (*cover) return cmd_cover(file, k);
        if (*cover_h) return cmd_cover_homotopy(file, k);
        if (*make_h) return cmd_make_homotopy(kind, rest, k, flag_left, flag_star, flag_sym);
        if (*vgrid) return cmd_verify_grid(file);
        if (*wind) return cmd_winding(file);
        if (*equiv) return cmd_equiv(file, file2, budget);
        if (*vwit) return cmd_verify_witness(file);
        if (*pi1) return cmd_pi1(ref, max_len, budget);
        if (*dc) return cmd_dc_example();
        if (*suite_cmd) return cmd_suite(only);
        if (*render) return cmd_render(file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
