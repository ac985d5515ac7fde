#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apnkit/diffspec.hpp"
#include "apnkit/errors.hpp"
#include "apnkit/families.hpp"
#include "apnkit/ffield.hpp"
#include "apnkit/numth.hpp"
#include "apnkit/reference_table.hpp"

using json = nlohmann::json;
using namespace apnkit;

namespace {

// All integers in machine-readable output are decimal strings: exponents
// routinely exceed what doubles (and many JSON consumers) can hold.
Int parse_big(const std::string& text, const char* what) {
    try {
        Int v(text);
        return v;
    } catch (const std::invalid_argument&) {
        throw ParameterError(std::string(what) + " is not a valid integer: '" + text + "'");
    }
}

std::vector<unsigned long> parse_coeff_list(const std::string& text) {
    std::vector<unsigned long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoul(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParameterError("bad coefficient '" + item + "' in modulus list");
        }
    }
    if (out.empty()) throw ParameterError("empty modulus list");
    return out;
}

std::string join_coset(const std::vector<Int>& coset, const std::string& sep) {
    std::string out;
    for (const Int& e : coset) {
        if (!out.empty()) out += sep;
        out += to_string(e);
    }
    return out;
}

json coset_json(const std::vector<Int>& coset) {
    json arr = json::array();
    for (const Int& e : coset) arr.push_back(to_string(e));
    return arr;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void check_exponent_range(const ffield::Field& field, const Int& d) {
    if (d < 0 || d > field.q() - 2)
        throw ParameterError("d must lie in [0, q-2] = [0, " + to_string(field.q() - 2) + "]");
}

// ---------------------------------------------------------------- field-info

struct FieldInfoArgs {
    unsigned long p = 0;
    unsigned n = 0;
    std::string modulus;
    bool as_json = false;
};

void run_field_info(const FieldInfoArgs& a) {
    const ffield::Field field = a.modulus.empty()
                                    ? ffield::Field(a.p, a.n)
                                    : ffield::Field(a.p, a.n, parse_coeff_list(a.modulus));
    if (a.as_json) {
        json j;
        j["p"] = std::to_string(a.p);
        j["n"] = std::to_string(a.n);
        j["q"] = to_string(field.q());
        json coeffs = json::array();
        for (unsigned long c : field.modulus()) coeffs.push_back(std::to_string(c));
        j["modulus"] = coeffs;
        emit_json(j);
        return;
    }
    std::cout << "GF(" << a.p << "^" << a.n << "), q = " << field.q() << "\n";
    std::cout << "modulus: " << field.modulus_string() << "\n";
    std::string coeffs;
    for (unsigned long c : field.modulus()) {
        if (!coeffs.empty()) coeffs += ",";
        coeffs += std::to_string(c);
    }
    std::cout << "modulus coefficients (constant first): " << coeffs << "\n";
}

// --------------------------------------------------------------------- delta

struct DeltaArgs {
    unsigned long p = 0;
    unsigned n = 0;
    std::string d;
    bool full_spectrum = false;
    bool as_json = false;
};

void run_delta(const DeltaArgs& a) {
    const ffield::Field field(a.p, a.n);
    const Int d = parse_big(a.d, "d");
    check_exponent_range(field, d);
    const diffspec::DifferentialSpectrum spec = diffspec::spectrum(field, d, field.one());

    if (a.as_json) {
        json j;
        j["p"] = std::to_string(a.p);
        j["n"] = std::to_string(a.n);
        j["d"] = to_string(d);
        j["delta"] = std::to_string(spec.max_count);
        json hist;
        for (const auto& [mult, howmany] : spec.histogram)
            hist[std::to_string(mult)] = std::to_string(howmany);
        j["histogram"] = hist;
        emit_json(j);
        return;
    }
    std::cout << spec.max_count << "\n";
    if (a.full_spectrum) {
        std::cout << "histogram (solution count -> number of b values):\n";
        for (const auto& [mult, howmany] : spec.histogram)
            std::cout << "  " << mult << " -> " << howmany << "\n";
    }
}

// --------------------------------------------------------------------- coset

struct CosetArgs {
    unsigned long p = 0;
    unsigned n = 0;
    std::string d;
    bool as_json = false;
};

void run_coset(const CosetArgs& a) {
    const Int d = parse_big(a.d, "d");
    const diffspec::ExponentClass cls = diffspec::cyclotomic_coset(a.p, a.n, d);
    if (a.as_json) {
        json j;
        j["p"] = std::to_string(a.p);
        j["n"] = std::to_string(a.n);
        j["d"] = to_string(d);
        j["representative"] = to_string(cls.representative);
        j["coset"] = coset_json(cls.coset);
        j["gcd"] = to_string(cls.gcd_with_group);
        emit_json(j);
        return;
    }
    std::cout << "representative: " << cls.representative << "\n";
    std::cout << "coset: {" << join_coset(cls.coset, ",") << "}\n";
    std::cout << "gcd(d, q-1): " << cls.gcd_with_group << "\n";
}

// ------------------------------------------------------------------- hermite

struct HermiteArgs {
    unsigned long p = 0;
    unsigned n = 0;
    std::string d;
    std::string t;
    bool as_json = false;
};

void run_hermite(const HermiteArgs& a) {
    const Int d = parse_big(a.d, "d");
    const Int t = parse_big(a.t, "t");
    const numth::HermiteReport rep = numth::hermite_coefficient(a.p, a.n, d, t);
    if (a.as_json) {
        json j;
        j["p"] = std::to_string(a.p);
        j["n"] = std::to_string(a.n);
        j["d"] = to_string(d);
        j["t"] = to_string(t);
        j["c"] = std::to_string(rep.c_mod_p);
        j["term_count"] = std::to_string(rep.term_count);
        j["certifies_not_permutation"] = rep.certifies_not_permutation();
        emit_json(j);
        return;
    }
    std::cout << "C = " << rep.c_mod_p << " (mod " << a.p << ")\n";
    if (rep.certifies_not_permutation()) {
        std::cout << "(x+1)^" << d << " - x^" << d << " is not a permutation polynomial of GF("
                  << a.p << "^" << a.n << ")\n";
    } else {
        std::cout << "no conclusion from t = " << t << " (coefficient vanishes)\n";
    }
}

// -------------------------------------------------------------------- family

struct FamilyArgs {
    std::string id;
    unsigned long p = 0;
    unsigned n = 0;
    unsigned k = 0;
    unsigned l = 0;
    std::string u;
    bool check = false;
    bool as_json = false;
};

families::FamilyDescriptor dispatch_family(const FamilyArgs& a, const CLI::App& cmd) {
    const bool has_n = cmd.count("-n") > 0;
    const bool has_k = cmd.count("-k") > 0;
    const bool has_l = cmd.count("-l") > 0;
    const bool has_u = cmd.count("-u") > 0;
    const bool has_p = cmd.count("-p") > 0;
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw ParameterError(std::string("family ") + a.id + " requires " + what);
    };
    if (a.id == "conj13") {
        need(has_n, "-n");
        return families::conj13_exponent(a.n);
    }
    if (a.id == "conj14") {
        need(has_n, "-n");
        return families::conj14_exponent(a.n);
    }
    if (a.id == "conj15") {
        need(has_n, "-n");
        return families::conj15_exponent(a.n);
    }
    if (a.id == "zw") {
        need(has_p && has_n && has_k && has_u, "-p, -n, -k and -u");
        return families::zw_exponent(a.p, a.n, a.k, parse_big(a.u, "u"));
    }
    if (a.id == "thm110") {
        need(has_n && has_l, "-n and -l");
        return families::thm110_exponent(a.n, a.l);
    }
    if (a.id == "hrs") {
        need(has_k && has_n, "-k and -n");
        return families::hrs_exponent(a.k, a.n);
    }
    if (a.id == "cor33") {
        need(has_n && has_l, "-n and -l");
        return families::cor33_exponent(a.n, a.l);
    }
    throw ParameterError("unknown family '" + a.id +
                         "' (expected conj13, conj14, conj15, zw, thm110, hrs or cor33)");
}

void run_family(const FamilyArgs& a, const CLI::App& cmd) {
    const families::FamilyDescriptor desc = dispatch_family(a, cmd);
    const Int group = ipow(desc.p, desc.n) - 1;
    const diffspec::ExponentClass cls =
        diffspec::cyclotomic_coset(desc.p, desc.n, mod_floor(desc.d, group));

    bool checked = false;
    std::uint64_t dlt = 0;
    if (a.check) {
        const Int q = ipow(desc.p, desc.n);
        if (q <= 100000) {
            const ffield::Field field(desc.p, desc.n);
            dlt = diffspec::delta(field, desc.d);
            checked = true;
        }
    }

    if (a.as_json) {
        json j;
        j["family"] = std::string(families::family_name(desc.family_id));
        j["p"] = std::to_string(desc.p);
        j["n"] = std::to_string(desc.n);
        j["d"] = to_string(desc.d);
        json params;
        for (const auto& [name, value] : desc.params) params[name] = to_string(value);
        j["params"] = params;
        j["gcd"] = to_string(desc.gcd_with_group);
        j["apn_guaranteed"] = desc.apn_guaranteed;
        j["coset_representative"] = to_string(cls.representative);
        if (!desc.note.empty()) j["note"] = desc.note;
        if (a.check) {
            json c;
            c["performed"] = checked;
            if (checked) {
                c["delta"] = std::to_string(dlt);
                c["apn"] = (dlt == 2);
            }
            j["check"] = c;
        }
        emit_json(j);
        return;
    }
    std::cout << "family: " << families::family_name(desc.family_id) << "\n";
    std::cout << "p = " << desc.p << ", n = " << desc.n << "\n";
    std::cout << "d = " << desc.d << "\n";
    std::string params;
    for (const auto& [name, value] : desc.params) {
        if (!params.empty()) params += ", ";
        params += name + " = " + to_string(value);
    }
    std::cout << "params: " << params << "\n";
    std::cout << "gcd(d, q-1): " << desc.gcd_with_group << "\n";
    std::cout << "apn guaranteed: " << (desc.apn_guaranteed ? "yes" : "no (delta <= 2 only)")
              << "\n";
    std::cout << "coset representative: " << cls.representative << "\n";
    if (!desc.note.empty()) std::cout << "note: " << desc.note << "\n";
    if (a.check) {
        if (checked) {
            std::cout << "delta = " << dlt << " -> " << (dlt == 2 ? "APN" : "not APN") << "\n";
        } else {
            std::cout << "check skipped: q too large for a brute-force sweep\n";
        }
    }
}

// -------------------------------------------------------------- verify-table

struct VerifyArgs {
    std::string only;
    std::string corrupt;
    bool as_json = false;
    bool as_csv = false;
};

int run_verify_table(const VerifyArgs& a) {
    const reference_table::VerificationReport report = reference_table::verify(a.only, a.corrupt);
    if (a.as_json) {
        json j;
        json rows = json::array();
        for (const auto& r : report.rows) {
            json row;
            row["label"] = r.row.label;
            row["p"] = std::to_string(r.row.p);
            row["n"] = std::to_string(r.row.n);
            row["d"] = std::to_string(r.row.d);
            json expected = json::array();
            for (unsigned long e : r.row.coset) expected.push_back(std::to_string(e));
            row["expected_coset"] = expected;
            row["computed_coset"] = coset_json(r.computed_coset);
            row["computed_delta"] = std::to_string(r.computed_delta);
            row["pass"] = r.pass;
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["overall"] = report.overall;
        emit_json(j);
    } else if (a.as_csv) {
        std::cout << "label,p,n,d,expected_coset,computed_coset,delta,pass\n";
        for (const auto& r : report.rows) {
            std::string expected;
            for (unsigned long e : r.row.coset) {
                if (!expected.empty()) expected += " ";
                expected += std::to_string(e);
            }
            std::cout << r.row.label << "," << r.row.p << "," << r.row.n << "," << r.row.d << ","
                      << expected << "," << join_coset(r.computed_coset, " ") << ","
                      << r.computed_delta << "," << (r.pass ? "pass" : "FAIL") << "\n";
        }
    } else {
        for (const auto& r : report.rows) {
            std::cout << "row " << r.row.label << ": GF(" << r.row.p << "^" << r.row.n
                      << ") d = " << r.row.d << ", delta = " << r.computed_delta << ", coset = {"
                      << join_coset(r.computed_coset, ",") << "} -> "
                      << (r.pass ? "PASS" : "FAIL") << "\n";
            if (!r.pass) {
                std::string expected;
                for (unsigned long e : r.row.coset) {
                    if (!expected.empty()) expected += ",";
                    expected += std::to_string(e);
                }
                std::cout << "  expected coset {" << expected << "} and delta = 2\n";
            }
        }
        std::cout << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    }
    return report.overall ? 0 : 1;
}

// -------------------------------------------------------------------- search

struct SearchArgs {
    unsigned long p = 0;
    unsigned n = 0;
    std::uint64_t delta_max = 2;
    bool as_json = false;
    bool as_csv = false;
};

void run_search(const SearchArgs& a) {
    const ffield::Field field(a.p, a.n);
    const std::vector<diffspec::ExponentClass> classes = diffspec::apn_search(field, a.delta_max);
    // one cheap recomputation per representative for the report
    std::vector<std::uint64_t> deltas;
    deltas.reserve(classes.size());
    for (const auto& cls : classes) deltas.push_back(diffspec::delta(field, cls.representative));

    if (a.as_json) {
        json j;
        j["p"] = std::to_string(a.p);
        j["n"] = std::to_string(a.n);
        j["delta_max"] = std::to_string(a.delta_max);
        json arr = json::array();
        for (std::size_t i = 0; i < classes.size(); ++i) {
            json c;
            c["representative"] = to_string(classes[i].representative);
            c["coset"] = coset_json(classes[i].coset);
            c["gcd"] = to_string(classes[i].gcd_with_group);
            c["delta"] = std::to_string(deltas[i]);
            arr.push_back(c);
        }
        j["classes"] = arr;
        emit_json(j);
        return;
    }
    if (a.as_csv) {
        std::cout << "representative,coset,gcd,delta\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::cout << classes[i].representative << "," << join_coset(classes[i].coset, " ")
                      << "," << classes[i].gcd_with_group << "," << deltas[i] << "\n";
        }
        return;
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::cout << "d = " << classes[i].representative << ", coset = {"
                  << join_coset(classes[i].coset, ",") << "}, gcd = "
                  << classes[i].gcd_with_group << ", delta = " << deltas[i] << "\n";
    }
    std::cout << classes.size() << " classes with delta <= " << a.delta_max << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact differential-uniformity toolkit for power maps over GF(p^n)"};
    app.require_subcommand(1);
    int exit_code = 0;

    FieldInfoArgs fi;
    CLI::App* c_fi = app.add_subcommand("field-info", "print field parameters and modulus");
    c_fi->add_option("-p", fi.p, "characteristic (prime)")->required();
    c_fi->add_option("-n", fi.n, "extension degree")->required();
    c_fi->add_option("--modulus", fi.modulus, "comma-separated coefficients, constant first");
    c_fi->add_flag("--json", fi.as_json, "machine-readable output");
    c_fi->callback([&] { run_field_info(fi); });

    DeltaArgs da;
    CLI::App* c_da = app.add_subcommand("delta", "differential uniformity of x -> x^d");
    c_da->add_option("-p", da.p, "characteristic (prime)")->required();
    c_da->add_option("-n", da.n, "extension degree")->required();
    c_da->add_option("-d", da.d, "exponent")->required();
    c_da->add_flag("--full-spectrum", da.full_spectrum, "also print the N(1,b) histogram");
    c_da->add_flag("--json", da.as_json, "machine-readable output");
    c_da->callback([&] { run_delta(da); });

    CosetArgs ca;
    CLI::App* c_ca = app.add_subcommand("coset", "cyclotomic coset of an exponent");
    c_ca->add_option("-p", ca.p, "characteristic (prime)")->required();
    c_ca->add_option("-n", ca.n, "extension degree")->required();
    c_ca->add_option("-d", ca.d, "exponent")->required();
    c_ca->add_flag("--json", ca.as_json, "machine-readable output");
    c_ca->callback([&] { run_coset(ca); });

    HermiteArgs ha;
    CLI::App* c_ha = app.add_subcommand(
        "hermite", "coefficient of x^(q-1) in ((x+1)^d - x^d)^t; nonzero means not a permutation");
    c_ha->add_option("-p", ha.p, "characteristic (prime)")->required();
    c_ha->add_option("-n", ha.n, "extension degree")->required();
    c_ha->add_option("-d", ha.d, "exponent")->required();
    c_ha->add_option("-t", ha.t, "test exponent, 1 <= t <= q-2, t not divisible by p")->required();
    c_ha->add_flag("--json", ha.as_json, "machine-readable output");
    c_ha->callback([&] { run_hermite(ha); });

    FamilyArgs fa;
    CLI::App* c_fa = app.add_subcommand("family", "generate an exponent from a named family");
    c_fa->add_option("id", fa.id, "conj13 | conj14 | conj15 | zw | thm110 | hrs | cor33")
        ->required();
    c_fa->add_option("-p", fa.p, "characteristic (zw only)");
    c_fa->add_option("-n", fa.n, "extension degree");
    c_fa->add_option("-k", fa.k, "family parameter k");
    c_fa->add_option("-l", fa.l, "family parameter l");
    c_fa->add_option("-u", fa.u, "family parameter u (zw only)");
    c_fa->add_flag("--check", fa.check, "brute-force delta when q <= 10^5");
    c_fa->add_flag("--json", fa.as_json, "machine-readable output");
    c_fa->callback([&] { run_family(fa, *c_fa); });

    VerifyArgs va;
    CLI::App* c_va = app.add_subcommand("verify-table",
                                        "recompute every reference row (coset and delta)");
    c_va->add_option("--only", va.only, "verify a single row label (I..VII)");
    c_va->add_flag("--json", va.as_json, "machine-readable output");
    c_va->add_flag("--csv", va.as_csv, "CSV output");
    c_va->add_option("--corrupt", va.corrupt, "perturb one expected coset (test fixture)")
        ->group(""); // hidden
    c_va->callback([&] { exit_code = run_verify_table(va); });

    SearchArgs sa;
    CLI::App* c_sa = app.add_subcommand("search",
                                        "canonical exponent classes with delta <= delta-max");
    c_sa->add_option("-p", sa.p, "characteristic (prime)")->required();
    c_sa->add_option("-n", sa.n, "extension degree")->required();
    c_sa->add_option("--delta-max", sa.delta_max, "uniformity bound")->required();
    c_sa->add_flag("--json", sa.as_json, "machine-readable output");
    c_sa->add_flag("--csv", sa.as_csv, "CSV output");
    c_sa->callback([&] { run_search(sa); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const NotInvertibleError& e) {
        std::cerr << "not invertible: " << e.what() << "\n";
        return 2;
    } catch (const NoSolutionError& e) {
        std::cerr << "no solution: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
