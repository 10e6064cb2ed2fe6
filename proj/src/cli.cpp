#include "gainspec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gainspec/core.hpp"
#include "gainspec/distance.hpp"
#include "gainspec/io.hpp"
#include "gainspec/paths.hpp"
#include "gainspec/spectra.hpp"
#include "gainspec/structure.hpp"
#include "gainspec/weighted.hpp"

namespace gainspec {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Lower triangle is emitted as the exact conjugate of the upper triangle,
// so the serialized matrix is Hermitian as written.
json matrix_json(const HermitianMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) {
            const Complex z = (i <= j) ? m.at(i, j) : std::conj(m.at(j, i));
            row.push_back(complex_json(z));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double spectral_tolerance(std::ostream& err) {
    if (const char* text = std::getenv("GAINSPEC_TOL")) {
        try {
            const double v = std::stod(text);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
        }
        err << "warning: ignoring invalid GAINSPEC_TOL value\n";
    }
    return kSpectralTol;
}

std::string read_source(const std::string& path, std::istream& input) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << input.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

VertexOrder parse_order(const std::string& spec, int n) {
    if (spec == "standard") return VertexOrder::standard(n);
    if (spec == "reverse") return VertexOrder::reversed(n);
    if (spec.rfind("perm=", 0) == 0) {
        std::vector<int> perm;
        std::istringstream stream(spec.substr(5));
        std::string item;
        while (std::getline(stream, item, ',')) {
            perm.push_back(std::stoi(item) - 1);  // 1-based in flags
        }
        if (static_cast<int>(perm.size()) != n) {
            throw PreconditionError("permutation length does not match vertex count");
        }
        return VertexOrder(std::move(perm));
    }
    throw PreconditionError("unknown order '" + spec + "'");
}

json cmd_balance(const ParsedGraph& parsed) {
    const auto result = is_balanced(parsed.graph);
    json out;
    out["balanced"] = result.balanced;
    out["anti_balanced"] = is_antibalanced(parsed.graph);
    if (result.balanced) {
        json zeta = json::array();
        for (const auto& z : result.switching->values()) zeta.push_back(complex_json(z.value()));
        out["switching"] = std::move(zeta);
    } else {
        json cycle = json::array();
        for (int v : result.certificate_cycle) cycle.push_back(v + 1);
        out["certificate_cycle"] = std::move(cycle);
        out["certificate_gain"] = complex_json(result.certificate_gain.value());
    }
    return out;
}

json cmd_distmat(const ParsedGraph& parsed, const std::string& order_spec) {
    const auto order = parse_order(order_spec, parsed.graph.order());
    const auto matrices = distance_matrices(parsed.graph, order);
    json out;
    json perm = json::array();
    for (int v : order.perm()) perm.push_back(v + 1);
    out["order"] = std::move(perm);
    out["dmax"] = matrix_json(matrices.dmax);
    out["dmin"] = matrix_json(matrices.dmin);
    return out;
}

json cmd_compat(const ParsedGraph& parsed) {
    const auto compat = is_distance_compatible(parsed.graph);
    const auto independence = is_order_independent(parsed.graph);
    json out;
    out["compatible"] = compat.compatible;
    out["order_independent"] = independence.independent;
    out["class"] = std::string(1, to_char(classify(parsed.graph)));
    if (compat.compatible) {
        out["witness"] = nullptr;
        out["distance_matrix"] = matrix_json(*compat.distance_matrix);
    } else {
        out["witness"] = json::array({compat.witness_pair->first + 1,
                                      compat.witness_pair->second + 1});
        json gains = json::array();
        for (const auto& g : compat.witness_gains) gains.push_back(complex_json(g.value()));
        out["witness_gains"] = std::move(gains);
    }
    return out;
}

json spectrum_block(const Spectrum& spectrum) {
    json out;
    json values = json::array();
    for (double mu : spectrum.eigenvalues) values.push_back(mu);
    out["eigenvalues"] = std::move(values);
    out["largest_eigenvalue"] = spectrum.lambda_max();
    out["spectral_radius"] = spectrum.spectral_radius();
    return out;
}

json cmd_spectrum(const ParsedGraph& parsed, bool distance, double tol) {
    if (distance) {
        const auto independence = is_order_independent(parsed.graph);
        if (!independence.independent) {
            throw PreconditionError("graph is order dependent; D^max is not well defined");
        }
        const auto matrices =
            distance_matrices(parsed.graph, VertexOrder::standard(parsed.graph.order()));
        json out = spectrum_block(eigenvalues_hermitian(matrices.dmax));
        out["matrix"] = "distance_max";
        out["distance_spectral_balance"] = distance_spectral_balance(parsed.graph, tol);
        out["distance_spectral_balance_largest"] =
            distance_spectral_balance_largest(parsed.graph, tol);
        return out;
    }
    const auto wg = parsed.weighted_graph();
    const auto a = weighted_adjacency(wg);
    json out = spectrum_block(eigenvalues_hermitian(a));
    out["matrix"] = parsed.weighted ? "weighted_adjacency" : "adjacency";
    out["cospectral_with_underlying"] = weighted_balance_cospectral(wg, tol);
    const auto phi = eigenvalues_hermitian(a);
    const auto underlying = eigenvalues_hermitian(a.entrywise_abs());
    out["largest_eigenvalue_matches_underlying"] =
        std::abs(phi.lambda_max() - underlying.lambda_max()) <= tol;
    out["radius_matches_underlying"] = weighted_radius_criterion(wg, tol);
    return out;
}

json cmd_sachs(const ParsedGraph& parsed) {
    const auto expansion = sachs_coefficients(parsed.weighted_graph());
    json out;
    json coeffs = json::array();
    for (double a : expansion.coefficients) coeffs.push_back(a);
    out["coefficients"] = std::move(coeffs);
    json counts = json::array();
    for (const auto& terms : expansion.terms) counts.push_back(terms.size());
    out["term_counts"] = std::move(counts);
    return out;
}

json cmd_blocks(const ParsedGraph& parsed) {
    const auto decomposition = block_decomposition(parsed.graph);
    json out;
    json blocks = json::array();
    json compat_flags = json::array();
    for (const auto& block : decomposition.blocks) {
        json edges = json::array();
        for (const auto& [u, v] : block) edges.push_back(json::array({u + 1, v + 1}));
        blocks.push_back(std::move(edges));
        const auto sub = block_subgraph(parsed.graph, block);
        compat_flags.push_back(is_distance_compatible(sub.graph).compatible);
    }
    out["blocks"] = std::move(blocks);
    json cuts = json::array();
    for (int v : decomposition.cut_vertices) cuts.push_back(v + 1);
    out["cut_vertices"] = std::move(cuts);
    out["block_compatible"] = std::move(compat_flags);
    out["compatible"] = is_distance_compatible(parsed.graph).compatible;
    return out;
}

std::string cmd_complete(const ParsedGraph& parsed, const std::string& which) {
    const auto order = VertexOrder::standard(parsed.graph.order());
    const GainGraph completed = (which == "max") ? completion_max(parsed.graph, order)
                                                 : completion_min(parsed.graph, order);
    return serialize(completed);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& input, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"gain graph toolkit: balance, gain distance matrices, spectra"};
    app.require_subcommand(1);

    std::string file;
    std::string order_spec = "standard";
    std::string which = "max";
    bool distance = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "gain graph file, or - for stdin")->required();
    };
    auto* balance = app.add_subcommand("balance", "balance and anti-balance verdicts");
    add_file(balance);
    auto* distmat = app.add_subcommand("distmat", "gain distance matrices D^max, D^min");
    add_file(distmat);
    distmat->add_option("--order", order_spec, "standard|reverse|perm=<1-based list>");
    auto* compat = app.add_subcommand("compat", "distance compatibility and class A|B|C|D");
    add_file(compat);
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and spectral criteria");
    add_file(spectrum);
    spectrum->add_flag("--distance", distance, "use D^max instead of the adjacency matrix");
    auto* sachs = app.add_subcommand("sachs", "characteristic polynomial coefficients");
    add_file(sachs);
    auto* blocks = app.add_subcommand("blocks", "block decomposition and per-block verdicts");
    add_file(blocks);
    auto* complete = app.add_subcommand("complete", "completion to a complete gain graph");
    add_file(complete);
    complete->add_option("--which", which, "max|min")
        ->check(CLI::IsMember({"max", "min"}));

    std::vector<const char*> argv;
    argv.push_back("gainspec");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const ParsedGraph parsed = parse_gain_graph(read_source(file, input));
        const double tol = spectral_tolerance(err);
        json result;
        if (balance->parsed()) {
            result = cmd_balance(parsed);
        } else if (distmat->parsed()) {
            result = cmd_distmat(parsed, order_spec);
        } else if (compat->parsed()) {
            result = cmd_compat(parsed);
        } else if (spectrum->parsed()) {
            result = cmd_spectrum(parsed, distance, tol);
        } else if (sachs->parsed()) {
            result = cmd_sachs(parsed);
        } else if (blocks->parsed()) {
            result = cmd_blocks(parsed);
        } else if (complete->parsed()) {
            out << cmd_complete(parsed, which);
            return 0;
        }
        out << result.dump(2) << "\n";
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConnectivityError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidPathError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ExplosionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gainspec
