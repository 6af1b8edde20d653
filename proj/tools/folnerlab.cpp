// folnerlab command-line front end.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "folnerlab/error.hpp"
#include "folnerlab/folner.hpp"
#include "folnerlab/fusion.hpp"
#include "folnerlab/io.hpp"
#include "folnerlab/reldim.hpp"
#include "folnerlab/solvers.hpp"
#include "folnerlab/tower.hpp"

using namespace folnerlab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_negative = 2;

struct Output {
    std::string path;

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw PreconditionError("cannot write " + path);
        out << text;
    }
};

// "[1,2]", "[[1,0],[0,1]]", "1,-1", "triv,std" or "generators"
IrrepSet parse_labels(const FusionRing& ring, const std::string& text)
{
    if (text == "generators")
        return IrrepSet(ring.generators());
    Json j;
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed.front() == '[') {
        try {
            j = Json::parse(trimmed);
        } catch (const nlohmann::json::parse_error& e) {
            throw PreconditionError("--S: " + std::string(e.what()));
        }
    } else {
        j = Json::array();
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(item, &used);
                if (used != item.size())
                    throw std::invalid_argument(item);
                j.push_back(v);
            } catch (const std::logic_error&) {
                j.push_back(item);
            }
        }
    }
    return set_from_json(ring, j);
}

std::shared_ptr<const FusionRing> ring_for(const std::string& tag)
{
    return shared_algebra(tag)->ring_ptr();
}

void check_ring(const std::string& tag, const PolAlgebra& alg)
{
    if (!tag.empty() && ring_for(tag)->tag() != alg.tag())
        throw PreconditionError("--ring " + tag + " does not match the input algebra " + alg.tag());
}

IrrepSet window_from(const FusionRing& ring, std::optional<long long> radius, const std::string& labels)
{
    if (!labels.empty())
        return parse_labels(ring, labels);
    if (!radius)
        throw PreconditionError("give --window N or --window-labels");
    return ring.standard_window(*radius);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Folner sets, relative dimensions and kernel certificates over fusion rings"};
    app.require_subcommand(1);
    Output out;
    int code = exit_ok;

    std::string ring_tag, s_text, epsilon_text, windows_file, format = "csv", matrix_file, element_file;
    std::string a_file, s_file, side_text, window_labels, labels_text, haar_file;
    long long max_radius = 64;
    std::optional<long long> window;
    std::vector<long long> moduli;
    bool prefer_ore = false;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out.path, "write the report to a file"); };

    auto* folner = app.add_subcommand("folner", "search for a Folner window");
    folner->add_option("--ring", ring_tag)->required();
    folner->add_option("--S", s_text, "labels: JSON array, comma list or 'generators'")->required();
    folner->add_option("--epsilon", epsilon_text, "p/q")->required();
    folner->add_option("--max-radius", max_radius);
    folner->add_option("--windows", windows_file, "JSON array of windows to scan instead of balls");
    add_out(folner);

    auto* profile = app.add_subcommand("profile", "isoperimetric profile of balls");
    profile->add_option("--ring", ring_tag)->required();
    profile->add_option("--S", s_text)->required();
    profile->add_option("--max-radius", max_radius);
    profile->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    add_out(profile);

    auto* kdim = app.add_subcommand("kernel-dim", "kernel dimension bracket on a window");
    kdim->add_option("--ring", ring_tag);
    kdim->add_option("--matrix", matrix_file)->required();
    kdim->add_option("--window", window, "standard window radius");
    kdim->add_option("--window-labels", window_labels, "explicit window");
    kdim->add_option("--side", side_text)->check(CLI::IsMember({"left", "right"}));
    add_out(kdim);

    auto* zd = app.add_subcommand("zero-divisor", "search for b != 0 with ab = 0 (left) or ba = 0 (right)");
    zd->add_option("--ring", ring_tag);
    zd->add_option("--element", element_file)->required();
    zd->add_option("--side", side_text)->check(CLI::IsMember({"left", "right"}));
    zd->add_option("--max-radius", max_radius);
    add_out(zd);

    auto* ore = app.add_subcommand("ore-pair", "solve a t = s b with t != 0");
    ore->add_option("--ring", ring_tag);
    ore->add_option("--a", a_file)->required();
    ore->add_option("--s", s_file)->required();
    ore->add_option("--max-radius", max_radius);
    ore->add_flag("--prefer-ore", prefer_ore, "search the whole nullspace for t != 0 first");
    add_out(ore);

    auto* tower = app.add_subcommand("tower", "kernel dimensions along a quotient tower");
    tower->add_option("--ring", ring_tag);
    tower->add_option("--moduli", moduli)->required()->delimiter(',');
    tower->add_option("--matrix", matrix_file)->required();
    tower->add_option("--window", window);
    tower->add_option("--window-labels", window_labels);
    tower->add_option("--side", side_text)->check(CLI::IsMember({"left", "right"}));
    tower->add_option("--haar", haar_file, "element whose Haar values to follow along the tower");
    add_out(tower);

    auto* axioms = app.add_subcommand("check-axioms", "check fusion ring axioms on a label set");
    axioms->add_option("--ring", ring_tag)->required();
    axioms->add_option("--labels", labels_text, "labels to check (default: provider window)");
    add_out(axioms);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (folner->parsed()) {
            auto ring = ring_for(ring_tag);
            IrrepSet S = parse_labels(*ring, s_text);
            mpq_class eps = parse_rational(epsilon_text);
            FolnerResult r;
            if (!windows_file.empty()) {
                Json ws = read_json_file(windows_file);
                if (!ws.is_array())
                    throw PreconditionError(windows_file + ": expected an array of windows");
                std::vector<IrrepSet> windows;
                for (const auto& w : ws)
                    windows.push_back(set_from_json(*ring, w));
                r = folner_search_windows(*ring, S, eps, windows);
            } else {
                r = folner_search(*ring, S, eps, max_radius);
            }
            out.write(dump(to_json(r, *ring)));
            code = std::holds_alternative<FolnerCertificate>(r) ? exit_ok : exit_negative;
        } else if (profile->parsed()) {
            auto ring = ring_for(ring_tag);
            IrrepSet S = parse_labels(*ring, s_text);
            auto rows = isoperimetric_profile(*ring, S, max_radius);
            out.write(format == "csv" ? profile_csv(rows) : dump(to_json(rows, S, *ring)));
        } else if (kdim->parsed()) {
            MatrixOverPol T = matrix_from_json(read_json_file(matrix_file));
            check_ring(ring_tag, T.algebra());
            const auto& ring = T.algebra().ring();
            IrrepSet F = window_from(ring, window, window_labels);
            Side side = side_text.empty() ? Side::right : parse_side(side_text);
            out.write(dump(to_json(kernel_dim_estimate(T, F, side), ring)));
        } else if (zd->parsed()) {
            AlgebraElement a = element_from_json(read_json_file(element_file));
            check_ring(ring_tag, a.algebra());
            Side side = side_text.empty() ? Side::left : parse_side(side_text);
            auto r = zero_divisor_search(a, side, max_radius);
            out.write(dump(to_json(r)));
            code = std::holds_alternative<ZeroDivisorCertificate>(r) ? exit_ok : exit_negative;
        } else if (ore->parsed()) {
            AlgebraElement a = element_from_json(read_json_file(a_file), "a");
            AlgebraElement s = element_from_json(read_json_file(s_file), "s");
            check_ring(ring_tag, a.algebra());
            check_ring(ring_tag, s.algebra());
            auto r = ore_pair(a, s, max_radius, prefer_ore);
            out.write(dump(to_json(r)));
            code = std::holds_alternative<OreExhaustion>(r) ? exit_negative : exit_ok;
        } else if (tower->parsed()) {
            MatrixOverPol T = matrix_from_json(read_json_file(matrix_file));
            check_ring(ring_tag, T.algebra());
            auto source = std::dynamic_pointer_cast<const GroupAlgebra>(T.algebra_ptr());
            if (!source)
                throw PreconditionError("towers are available for group algebras only");
            const auto& ring = T.algebra().ring();
            IrrepSet F = window_from(ring, window, window_labels);
            Side side = side_text.empty() ? Side::right : parse_side(side_text);
            QuotientTower qt(source, std::vector<std::int64_t>(moduli.begin(), moduli.end()));
            auto report = tower_kernel_dims(T, qt, F, side);
            std::optional<HaarReport> haar;
            if (!haar_file.empty()) {
                AlgebraElement h = element_from_json(read_json_file(haar_file), "haar");
                check_ring(ring.tag(), h.algebra());
                haar = haar_approx_sequence(h, qt);
            }
            out.write(dump(to_json(report, ring, haar ? &*haar : nullptr)));
        } else if (axioms->parsed()) {
            auto ring = ring_for(ring_tag);
            IrrepSet labels = labels_text.empty() ? default_axiom_labels(*ring) : parse_labels(*ring, labels_text);
            auto report = check_fusion_axioms(*ring, labels);
            out.write(dump(to_json(report, *ring)));
            code = report.ok() ? exit_ok : exit_negative;
        }
    } catch (const std::exception& e) {
        std::cerr << "folnerlab: " << e.what() << "\n";
        return exit_error;
    }
    return code;
}
