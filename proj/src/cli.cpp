#include "polygauss/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>

#include "polygauss/parse.hpp"
#include "polygauss/verify.hpp"

namespace polygauss {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchema = "polygauss-report/1";

struct Options {
    std::string ring;
    std::string gens;
    std::string ideal;
    std::string ideal2;
    std::string elem;
    std::string poly;
    std::string poly2;
    std::string at;
    std::string order = "grevlex";
    std::string format = "text";
    std::int64_t degree = -1;
    std::uint32_t mmax = 3;
    std::uint32_t power = 2;
    bool serial = false;
    bool negative_control = false;
    bool no_timing = false;
};

ContextPtr ctx_for_order(const RingPtr& ring, const std::string& order) {
    if (order == "grevlex") return ring->full_ctx();
    const ContextPtr& fc = ring->full_ctx();
    return PolyContext::make(fc->field(), fc->vars(), MonomialOrder::lex(fc->nvars()),
                             fc->main_var());
}

Polynomial move_to(const Polynomial& p, const ContextPtr& ctx) {
    std::vector<std::size_t> id(p.context()->nvars());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return remap(p, ctx, id);
}

Json gens_json(const std::vector<Polynomial>& gens) {
    Json a = Json::array();
    for (const auto& g : gens) a.push_back(g.to_string());
    return a;
}

void emit(std::ostream& out, const Options& opt, const std::string& command,
          const std::string& status, const Json& payload, double ms,
          const std::string& text) {
    if (opt.format == "json") {
        Json report;
        report["schema"] = kSchema;
        report["command"] = command;
        report["status"] = status;
        report["result"] = payload;
        if (!opt.no_timing) report["timing_ms"] = ms;
        out << report.dump(2) << "\n";
    } else {
        out << text;
        if (!opt.no_timing) out << "time: " << ms << " ms\n";
    }
}

int cmd_gb(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    ContextPtr ctx = ctx_for_order(ring, opt.order);
    std::vector<Polynomial> gens;
    for (const auto& g : parse_poly_list(opt.gens, ring)) gens.push_back(move_to(g, ctx));
    for (const auto& j : ring->defining_gens_full()) gens.push_back(move_to(j, ctx));
    GroebnerPtr gb = buchberger(ctx, gens);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["ring"] = ring->to_string();
    payload["order"] = opt.order;
    payload["basis"] = gens_json(gb->gens);
    std::string text = "reduced Groebner basis (" + opt.order + "):\n";
    for (const auto& g : gb->gens) text += "  " + g.to_string() + "\n";
    emit(out, opt, "gb", "pass", payload, ms, text);
    return 0;
}

int cmd_nf(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    ContextPtr ctx = ctx_for_order(ring, opt.order);
    std::vector<Polynomial> gens;
    for (const auto& g : parse_poly_list(opt.gens, ring)) gens.push_back(move_to(g, ctx));
    for (const auto& j : ring->defining_gens_full()) gens.push_back(move_to(j, ctx));
    GroebnerPtr gb = buchberger(ctx, gens);
    Polynomial nf = normal_form(move_to(parse_poly(opt.elem, ring), ctx), *gb);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["ring"] = ring->to_string();
    payload["normal_form"] = nf.to_string();
    emit(out, opt, "nf", "pass", payload, ms, "normal form: " + nf.to_string() + "\n");
    return 0;
}

int cmd_member(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    IdealHandle ideal(ring, parse_poly_list_base(opt.ideal, ring));
    Polynomial f = parse_poly_base(opt.elem, ring);
    bool member = is_member(f, ideal);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["element"] = f.to_string();
    payload["ideal"] = ideal.to_string();
    payload["member"] = member;
    emit(out, opt, "member", member ? "pass" : "fail", payload, ms,
         std::string(member ? "true" : "false") + "\n");
    return member ? 0 : 1;
}

int cmd_equal(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    IdealHandle a(ring, parse_poly_list_base(opt.ideal, ring));
    IdealHandle b(ring, parse_poly_list_base(opt.ideal2, ring));
    bool eq = ideal_equal(a, b);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["lhs"] = a.to_string();
    payload["rhs"] = b.to_string();
    payload["equal"] = eq;
    emit(out, opt, "equal", eq ? "pass" : "fail", payload, ms,
         std::string(eq ? "true" : "false") + "\n");
    return eq ? 0 : 1;
}

int cmd_colon(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    IdealHandle a(ring, parse_poly_list_base(opt.ideal, ring));
    IdealHandle b(ring, parse_poly_list_base(opt.ideal2, ring));
    IdealHandle quotient = colon(a, b).minimalized();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["colon"] = gens_json(quotient.generators());
    emit(out, opt, "colon", "pass", payload, ms, quotient.to_string() + "\n");
    return 0;
}

int cmd_content(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    Polynomial f = parse_poly(opt.poly, ring);
    IdealHandle c = content(ring, f);
    auto principal = principal_generator(c);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["poly"] = f.to_string();
    payload["content"] = gens_json(c.generators());
    payload["principal"] = principal ? Json(principal->to_string()) : Json(nullptr);
    std::string text = "content: " + c.to_string() + "\n";
    if (principal) text += "principal, generated by " + principal->to_string() + "\n";
    emit(out, opt, "content", "pass", payload, ms, text);
    return 0;
}

Json witness_json(const std::optional<GaussianWitness>& w) {
    if (!w) return Json(nullptr);
    Json j;
    j["g"] = w->g.to_string();
    j["element"] = w->element.to_string();
    return j;
}

int cmd_gaussian(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    Polynomial f = parse_poly(opt.poly, ring);
    GaussianVerdict v;
    if (opt.degree >= 0)
        v = gaussian_generic(ring, f, static_cast<std::uint32_t>(opt.degree));
    else if (ring->claimed_domain())
        v = gaussian_status_domain(ring, f);
    else
        v = gaussian_generic(ring, f, static_cast<std::uint32_t>(f.main_degree()));
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["poly"] = f.to_string();
    payload["status"] = to_string(v.status);
    payload["method"] = to_string(v.method);
    payload["degree_tested"] = v.degree_tested;
    payload["witness"] = witness_json(v.witness);
    payload["note"] = v.note;
    std::string text = std::string("status: ") + to_string(v.status) + " (method " +
                       to_string(v.method) + ", degree " +
                       std::to_string(v.degree_tested) + ")\n" + v.note + "\n";
    if (v.witness)
        text += "witness: g = " + v.witness->g.to_string() + ", element " +
                v.witness->element.to_string() + " in c(f)c(g) but not in c(fg)\n";
    bool certified = v.status == GaussianStatus::Certified;
    emit(out, opt, "gaussian", certified ? "pass" : "fail", payload, ms, text);
    return certified ? 0 : 1;
}

int cmd_invertible(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    IdealHandle ideal(ring, parse_poly_list_base(opt.ideal, ring));
    InvertibilityResult res = is_invertible(ideal);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["ideal"] = ideal.to_string();
    payload["invertible"] = res.invertible;
    payload["denominator"] = res.inverse.denominator.to_string();
    payload["inverse_numerator"] = gens_json(res.inverse.numerator.minimalized().generators());
    std::string text = std::string(res.invertible ? "true" : "false") + "\n";
    text += "inverse = (1/(" + res.inverse.denominator.to_string() + ")) * " +
            res.inverse.numerator.minimalized().to_string() + "\n";
    if (res.invertible) {
        Json cert = Json::array();
        text += "certificate: " + res.inverse.denominator.to_string() + " =";
        for (std::size_t i = 0; i < res.certificate.size(); ++i) {
            const auto& term = res.certificate[i];
            Json t;
            t["cofactor"] = term.cofactor.to_string();
            t["generator"] = term.generator.to_string();
            cert.push_back(t);
            text += (i ? " + (" : " (") + term.cofactor.to_string() + ")*(" +
                    term.generator.to_string() + ")";
        }
        text += "\n";
        payload["certificate"] = cert;
    } else {
        payload["product_basis"] = gens_json(res.product.gb()->gens);
        payload["principal_basis"] = gens_json(res.principal_d.gb()->gens);
        text += "I * (d : I) differs from (d): basis " + res.product.minimalized().to_string() +
                " vs " + res.principal_d.minimalized().to_string() + "\n";
    }
    emit(out, opt, "invertible", res.invertible ? "pass" : "fail", payload, ms, text);
    return res.invertible ? 0 : 1;
}

int cmd_nu(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    Polynomial f = parse_poly(opt.poly, ring);
    LocalityWitness at(IdealHandle(ring, parse_poly_list_base(opt.at, ring)));
    NuSequence seq = nu_sequence(ring, f, at, opt.mmax);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["content"] = gens_json(seq.content_ideal.generators());
    payload["bound"] = seq.bound;
    payload["nu"] = seq.nu;
    payload["bound_violated_at"] =
        seq.bound_violated_at ? Json(*seq.bound_violated_at) : Json(nullptr);
    Json track = Json::array();
    for (std::size_t m = 0; m < seq.track.size(); ++m) {
        Json t;
        t["h"] = seq.track[m].to_string();
        t["content_matches_power"] = static_cast<bool>(seq.track_matches_power[m]);
        t["degree_preserved"] = static_cast<bool>(seq.degree_preserved[m]);
        track.push_back(t);
    }
    payload["track"] = track;

    std::string text = "content " + seq.content_ideal.to_string() + ", bound deg(f)+1 = " +
                       std::to_string(seq.bound) + "\n";
    text += "nu(c(f)^(2^m)) for m = 0.." + std::to_string(seq.mmax) + ":";
    for (auto v : seq.nu) text += " " + std::to_string(v);
    text += "\n";
    if (seq.bound_violated_at)
        text += "bound violated from m = " + std::to_string(*seq.bound_violated_at) +
                ": f is not Gaussian\n";
    else
        text += "bound holds for all tested m\n";
    emit(out, opt, "nu", "pass", payload, ms, text);
    return 0;
}

int cmd_dm(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    RingPtr ring = parse_ring(opt.ring);
    Polynomial f = parse_poly(opt.poly, ring);
    Polynomial g = parse_poly(opt.poly2, ring);
    DedekindMertensReport report = dedekind_mertens_check(ring, f, g);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json payload;
    payload["exponent"] = report.exponent;
    payload["exponent_identity"] = report.exponent_identity;
    payload["radical_identity"] = report.radical_identity;
    std::string text = std::string("exponent identity (m = ") +
                       std::to_string(report.exponent) + "): " +
                       (report.exponent_identity ? "holds" : "FAILS") + "\n" +
                       "radical identity: " + (report.radical_identity ? "holds" : "FAILS") +
                       "\n";
    emit(out, opt, "dm", report.holds() ? "pass" : "fail", payload, ms, text);
    return report.holds() ? 0 : 1;
}

int cmd_verify_paper(std::ostream& out, const Options& opt) {
    auto start = Clock::now();
    VerifyOptions vopts;
    vopts.parallel = !opt.serial;
    vopts.negative_control = opt.negative_control;
    std::vector<CheckResult> checks = run_verification_catalog(vopts);
    bool pass = all_pass(checks);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    if (opt.format == "json") {
        Json payload = Json::array();
        for (const auto& c : checks) {
            Json j;
            j["name"] = c.name;
            j["pass"] = c.pass;
            j["detail"] = c.detail;
            if (!opt.no_timing) j["ms"] = c.ms;
            payload.push_back(j);
        }
        Json report;
        report["schema"] = kSchema;
        report["command"] = "verify-paper";
        report["status"] = pass ? "pass" : "fail";
        report["result"] = payload;
        if (!opt.no_timing) report["timing_ms"] = ms;
        out << report.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!opt.no_timing) out << " (" << c.ms << " ms)";
            out << "\n    " << c.detail << "\n";
        }
        out << (pass ? "all checks passed" : "some checks FAILED") << "\n";
        if (!opt.no_timing) out << "time: " << ms << " ms\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact content ideals of polynomials over presented rings"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--no-timing", opt.no_timing, "omit timings (stable output)");
    };
    auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", opt.ring, "ring, e.g. \"QQ[x,y]/(x*y) domain\"")
            ->required();
    };

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_ring(gb);
    gb->add_option("--gens", opt.gens, "comma-separated generators")->required();
    gb->add_option("--order", opt.order)->check(CLI::IsMember({"lex", "grevlex"}));
    add_format(gb);

    CLI::App* nf = app.add_subcommand("nf", "normal form modulo an ideal");
    add_ring(nf);
    nf->add_option("--gens", opt.gens)->required();
    nf->add_option("--elem", opt.elem)->required();
    nf->add_option("--order", opt.order)->check(CLI::IsMember({"lex", "grevlex"}));
    add_format(nf);

    CLI::App* member = app.add_subcommand("member", "ideal membership");
    add_ring(member);
    member->add_option("--ideal", opt.ideal)->required();
    member->add_option("--elem", opt.elem)->required();
    add_format(member);

    CLI::App* equal = app.add_subcommand("equal", "ideal equality");
    add_ring(equal);
    equal->add_option("--ideal", opt.ideal)->required();
    equal->add_option("--ideal2", opt.ideal2)->required();
    add_format(equal);

    CLI::App* colon_cmd = app.add_subcommand("colon", "colon ideal (I : J)");
    add_ring(colon_cmd);
    colon_cmd->add_option("--ideal", opt.ideal)->required();
    colon_cmd->add_option("--ideal2", opt.ideal2)->required();
    add_format(colon_cmd);

    CLI::App* content_cmd = app.add_subcommand("content", "content ideal of f");
    add_ring(content_cmd);
    content_cmd->add_option("--poly", opt.poly)->required();
    add_format(content_cmd);

    CLI::App* gaussian = app.add_subcommand("gaussian", "Gaussian status of f");
    add_ring(gaussian);
    gaussian->add_option("--poly", opt.poly)->required();
    gaussian->add_option("--degree", opt.degree, "generic cofactor degree");
    add_format(gaussian);

    CLI::App* invertible = app.add_subcommand("invertible", "content/ideal invertibility");
    add_ring(invertible);
    invertible->add_option("--ideal", opt.ideal)->required();
    add_format(invertible);

    CLI::App* nu = app.add_subcommand("nu", "nu sequence of content powers");
    add_ring(nu);
    nu->add_option("--poly", opt.poly)->required();
    nu->add_option("--at", opt.at, "rational maximal ideal generators")->required();
    nu->add_option("--mmax", opt.mmax);
    add_format(nu);

    CLI::App* dm = app.add_subcommand("dm", "Dedekind-Mertens identity check");
    add_ring(dm);
    dm->add_option("--poly", opt.poly)->required();
    dm->add_option("--poly2", opt.poly2)->required();
    add_format(dm);

    CLI::App* verify = app.add_subcommand("verify-paper", "run the verification catalog");
    verify->add_flag("--serial", opt.serial, "disable the parallel sweep runner");
    verify->add_flag("--negative-control", opt.negative_control,
                     "drop the quotient from the extension-defect ring; the run must fail");
    add_format(verify);

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gb->parsed()) return cmd_gb(out, opt);
        if (nf->parsed()) return cmd_nf(out, opt);
        if (member->parsed()) return cmd_member(out, opt);
        if (equal->parsed()) return cmd_equal(out, opt);
        if (colon_cmd->parsed()) return cmd_colon(out, opt);
        if (content_cmd->parsed()) return cmd_content(out, opt);
        if (gaussian->parsed()) return cmd_gaussian(out, opt);
        if (invertible->parsed()) return cmd_invertible(out, opt);
        if (nu->parsed()) return cmd_nu(out, opt);
        if (dm->parsed()) return cmd_dm(out, opt);
        if (verify->parsed()) return cmd_verify_paper(out, opt);
        err << "no command\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace polygauss
