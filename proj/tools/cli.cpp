#include "cli.hpp"

#include "torgit/errors.hpp"
#include "torgit/hilbert.hpp"
#include "torgit/json_io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>

namespace torgit::cli {

namespace {

using json_io::Json;

struct Inputs {
    std::string action, character, support, psi, center, graph, config, orders, mults;
    std::string chi_l, chi_m, mode = "check", route = "rule";
    std::size_t height_bound = 4, degree = 6, n = 0;
    bool verify = false, all_monomials = false;
};

Character character_from(const std::string& text) { return Character(json_io::int_vector_from_json(json_io::load(text))); }

Json error_json(const char* kind, const std::string& message) {
    Json out;
    out["error"]["kind"] = kind;
    out["error"]["message"] = message;
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Exact GIT computations for diagonal torus actions", "torgit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t max_supports = std::uint64_t{1} << 20;
    std::size_t max_steps = 32;
    bool serial = false;
    app.add_option("--max-supports", max_supports, "Largest support scan allowed")->capture_default_str();
    app.add_option("--max-steps", max_steps, "Largest desingularization tower allowed")->capture_default_str();
    app.add_flag("--serial", serial, "Run support scans on one thread");

    Inputs in;
    std::map<CLI::App*, std::function<Json()>> handlers;
    ScanOptions scan;

    auto action = [&] { return json_io::action_from_json(json_io::load(in.action)); };
    auto add_action = [&](CLI::App* sub) { sub->add_option("--action", in.action, "Action JSON (file or inline)")->required(); };
    auto add_char = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--char", in.character, "Character as a JSON array");
        if (required) o->required();
    };

    for (const char* name : {"semistable", "stable"}) {
        auto* sub = app.add_subcommand(name, std::string("Test ") + name + "ility of a support, or list all such supports");
        add_action(sub);
        add_char(sub, true);
        sub->add_option("--support", in.support, "1-based support as a JSON array");
        const bool want_stable = std::string(name) == "stable";
        handlers[sub] = [&, want_stable, key = std::string(name)] {
            TorusAction a = action();
            Character chi = character_from(in.character);
            Json res;
            if (in.support.empty()) {
                res[key + "_supports"] = json_io::supports_to_json(want_stable ? stable_supports(a, chi, scan)
                                                                               : semistable_supports(a, chi, scan));
            } else {
                Support s = json_io::support_from_json(json_io::load(in.support), a.dim());
                res[key] = want_stable ? is_stable(a, chi, s) : is_semistable(a, chi, s);
            }
            return res;
        };
    }

    {
        auto* sub = app.add_subcommand("hm-min", "Normalized Hilbert-Mumford minimum on a support");
        add_action(sub);
        add_char(sub, true);
        sub->add_option("--support", in.support, "1-based support as a JSON array")->required();
        handlers[sub] = [&] {
            TorusAction a = action();
            auto m = normalized_hm_min(a, character_from(in.character),
                                       json_io::support_from_json(json_io::load(in.support), a.dim()));
            Json res;
            res["value"] = m ? json_io::to_json(m->value) : Json(nullptr);
            res["minimizer"] = m ? json_io::to_json(m->minimizer.entries) : Json(nullptr);
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("minimal-values", "Distinct normalized minima over all supports");
        add_action(sub);
        add_char(sub, true);
        handlers[sub] = [&] {
            Json res;
            res["values"] = json_io::to_json(minimal_hm_values(action(), character_from(in.character), scan));
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("combine", "Combine two linearizations into one");
        add_action(sub);
        sub->add_option("--chi-l", in.chi_l, "First character")->required();
        sub->add_option("--chi-m", in.chi_m, "Second character")->required();
        handlers[sub] = [&] {
            TorusAction a = action();
            auto c = combine_linearizations(a, character_from(in.chi_l), character_from(in.chi_m), scan);
            Json res = json_io::to_json(c);
            res["semistable_supports"] = json_io::supports_to_json(semistable_supports(a, c.combined, scan));
            return res;
        };
    }

    auto psi_for = [&](const TorusAction& a) {
        return in.psi.empty() ? IntMatrix::identity(a.rank()) : json_io::int_matrix_from_json(json_io::load(in.psi));
    };
    {
        auto* sub = app.add_subcommand("walls", "Walls of the character space pulled back along psi");
        add_action(sub);
        sub->add_option("--psi", in.psi, "r x n integer matrix (default identity)");
        handlers[sub] = [&] {
            TorusAction a = action();
            Json res;
            res["walls"] = json_io::to_json(compute_walls(a, psi_for(a)));
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("generic-character", "Least character off every wall");
        add_action(sub);
        sub->add_option("--psi", in.psi, "r x n integer matrix (default identity)");
        sub->add_option("--height-bound", in.height_bound, "Largest entry size searched")->capture_default_str();
        handlers[sub] = [&] {
            TorusAction a = action();
            WallArrangement w = compute_walls(a, psi_for(a));
            Character mu = find_generic_character(w, in.height_bound);
            Json res;
            res["walls"] = json_io::to_json(w);
            res["generic"] = json_io::to_json(mu.entries);
            res["pulled_back"] = json_io::to_json(pull_back(w, mu).entries);
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("verify-chamber", "Check semistable equals stable for a character");
        add_action(sub);
        add_char(sub, true);
        sub->add_option("--psi", in.psi, "r x n integer matrix (default identity)");
        handlers[sub] = [&] {
            TorusAction a = action();
            WallArrangement w = compute_walls(a, psi_for(a));
            Character mu = character_from(in.character);
            Character pulled = pull_back(w, mu);
            ChamberCheck c = verify_ss_equals_s(a, pulled, scan);
            Json res;
            res["pulled_back"] = json_io::to_json(pulled.entries);
            res["generic"] = is_generic(w, mu);
            res["ss_equals_s"] = c.ss_equals_s;
            res["counterexample"] = c.counterexample ? json_io::support_to_json(*c.counterexample) : Json(nullptr);
            return res;
        };
    }

    auto add_center = [&](CLI::App* sub) {
        sub->add_option("--center", in.center, "Center JSON {\"coords\", \"weights\"}")->required();
    };
    {
        auto* sub = app.add_subcommand("eb", "Extended weighted blow-up presentation");
        add_action(sub);
        add_center(sub);
        handlers[sub] = [&] {
            TorusAction a = action();
            auto eb = extended_weighted_blowup(a, json_io::center_from_json(json_io::load(in.center), a.dim()));
            return json_io::to_json(eb, scan);
        };
    }
    {
        auto* sub = app.add_subcommand("saturate", "Saturated blow-up locus and exceptional divisor");
        add_action(sub);
        add_center(sub);
        handlers[sub] = [&] {
            TorusAction a = action();
            auto eb = extended_weighted_blowup(a, json_io::center_from_json(json_io::load(in.center), a.dim()));
            auto div = exceptional_divisor(eb, scan);
            Json res;
            res["saturated_locus"] = json_io::supports_to_json(saturated_locus(eb, scan));
            res["weighted_blowup_locus"] = json_io::supports_to_json(weighted_blowup_locus(eb, scan));
            res["exceptional_divisor"]["on_divisor"] = json_io::supports_to_json(div.on_divisor);
            res["exceptional_divisor"]["blowup_on_divisor"] = json_io::supports_to_json(div.blowup_on_divisor);
            return res;
        };
    }
    int desing_status = 0;
    {
        auto* sub = app.add_subcommand("desing", "Iterated partial desingularization tower");
        add_action(sub);
        add_char(sub, false);
        sub->add_flag("--verify", in.verify, "Run the tower postcondition checks");
        handlers[sub] = [&] {
            TorusAction a = action();
            Character chi = in.character.empty() ? Character(IntVector(a.rank(), Integer(0))) : character_from(in.character);
            DesingOptions opts;
            opts.max_steps = max_steps;
            opts.scan = scan;
            DesingTower t = desingularize(a, chi, opts);
            Json res = json_io::to_json(t);
            if (in.verify) {
                TowerReport r = verify_tower(t, scan);
                res["verification"] = json_io::to_json(r);
                if (!r.passed()) desing_status = 3;
            }
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("stabilizer", "Stabilizer of the points with a given support");
        add_action(sub);
        sub->add_option("--support", in.support, "1-based support as a JSON array")->required();
        handlers[sub] = [&] {
            TorusAction a = action();
            return json_io::to_json(stabilizer(a, json_io::support_from_json(json_io::load(in.support), a.dim())));
        };
    }
    {
        auto* sub = app.add_subcommand("invariants", "Invariant monomials and their Hilbert basis");
        add_action(sub);
        sub->add_option("--degree", in.degree, "Total degree bound")->capture_default_str();
        sub->add_flag("--all", in.all_monomials, "Also list every invariant monomial");
        handlers[sub] = [&] {
            TorusAction a = action();
            Json res;
            res["degree_bound"] = in.degree;
            Json basis = Json::array();
            for (const auto& v : hilbert_basis_bounded(a.weights(), in.degree)) basis.push_back(json_io::to_json(v));
            res["hilbert_basis"] = basis;
            if (in.all_monomials) {
                Json all = Json::array();
                for (const auto& v : invariant_monomials(a.weights(), in.degree)) all.push_back(json_io::to_json(v));
                res["monomials"] = all;
            }
            return res;
        };
    }

    auto graph = [&] { return json_io::graph_from_json(json_io::load(in.graph)); };
    {
        auto* sub = app.add_subcommand("quasimap", "Stability of a quasimap from its dual graph");
        sub->add_option("mode", in.mode, "Only \"check\" is available")->check(CLI::IsMember({"check"}));
        sub->add_option("--graph", in.graph, "Dual graph JSON (file or inline)")->required();
        handlers[sub] = [&] {
            TwistedCurveGraph g = graph();
            Json res = json_io::to_json(is_stable_quasimap(g));
            const bool hyp = satisfies_ampleness_hypotheses(g);
            res["ampleness_hypotheses"] = hyp;
            res["epsilon_ample"] = hyp ? Json(epsilon_ample_equivalent(g)) : Json(nullptr);
            Json beta = Json::object();
            for (const auto& [name, q] : class_beta(g)) beta[name] = json_io::to_json(q);
            res["class_beta"] = beta;
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("binary-forms", "Stability of a divisor of degree 2n on P^1");
        sub->add_option("--n", in.n, "Half the degree")->required();
        sub->add_option("--mults", in.mults, "Point multiplicities as a JSON array")->required();
        sub->add_option("--route", in.route, "rule or hm")->check(CLI::IsMember({"rule", "hm"}))->capture_default_str();
        handlers[sub] = [&] {
            auto m = json_io::size_list_from_json(json_io::load(in.mults));
            auto test = in.route == "hm" ? binary_forms_hm : check_binary_forms;
            Json res;
            res["semistable"] = test(m, in.n, BinaryFormMode::Semistable);
            res["dm"] = test(m, in.n, BinaryFormMode::StableDm);
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("conic", "Divisor configuration on P^1 or a twisted conic");
        sub->add_option("--config", in.config, "DivisorConfig JSON (file or inline)")->required();
        handlers[sub] = [&] {
            ConicVerdict v = check_twisted_conic(json_io::divisor_config_from_json(json_io::load(in.config)));
            Json res;
            res["valid_in_cy"] = v.valid_in_cy;
            res["in_dm"] = v.in_dm;
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("dvr-lift", "Lift of a DVR point through the blow-up of the origin");
        sub->add_option("--orders", in.orders, "Orders as a JSON array or {\"orders\": [...]}")->required();
        handlers[sub] = [&] {
            Json j = json_io::load(in.orders);
            auto orders = j.is_object() ? json_io::dvr_data_from_json(j) : json_io::size_list_from_json(j);
            return json_io::to_json(dvr_lift(orders));
        };
    }
    {
        auto* sub = app.add_subcommand("pencil", "Degree bookkeeping for a pencil of plane cubics");
        sub->add_option("--graph", in.graph, "Dual graph JSON (file or inline)")->required();
        handlers[sub] = [&] {
            PencilReport r = check_pencil_degrees(graph());
            Json res;
            res["passed"] = r.passed();
            res["vertex_passes"] = r.vertex_passes;
            return res;
        };
    }
    {
        auto* sub = app.add_subcommand("luna-cubics", "Certificate for the Luna slice of plane cubics at x0 x1 x2");
        handlers[sub] = [&] { return json_io::to_json(cubics_example()); };
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, out);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, out);
    } catch (const CLI::ParseError& e) {
        out << error_json("input_error", e.what()).dump(2) << "\n";
        return 1;
    }

    scan.max_supports = max_supports;
    scan.policy = serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
    try {
        for (auto& [sub, handler] : handlers)
            if (sub->parsed()) {
                out << handler().dump(2) << "\n";
                return desing_status;
            }
        throw InternalError("no subcommand handler ran");
    } catch (const InputError& e) {
        out << error_json("input_error", e.what()).dump(2) << "\n";
        return 1;
    } catch (const ComputationDeclined& e) {
        out << error_json("computation_declined", e.what()).dump(2) << "\n";
        return 2;
    } catch (const InternalError& e) {
        out << error_json("internal_error", e.what()).dump(2) << "\n";
        return 3;
    }
}

}  // namespace torgit::cli
