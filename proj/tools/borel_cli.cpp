// Command-line driver. Every subcommand prints one JSON document (or the
// same numbers rendered as an indented table) on stdout; wall-clock timing
// goes to stderr so repeated runs are byte-identical on stdout.
//
// Exit codes: 0 = computation completed (a mathematical "fail" verdict is
// still data), 1 = bad input or usage, 2 = internal invariant violation.

#include <chrono>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "borel/rd_file.hpp"
#include "borel/root_datum.hpp"
#include "borel/schubert.hpp"
#include "borel/splitting.hpp"
#include "borel/tate.hpp"
#include "borel/torsion.hpp"
#include "borel/version.hpp"
#include "borel/weyl.hpp"

namespace {

using borel::CoeffRing;
using borel::Int;
using borel::RootDatum;
using borel::TateSeries;
using borel::WeylGroup;
using json = nlohmann::ordered_json;

// Integers that fit in 64 bits stay JSON numbers; anything wider becomes a
// decimal string so no consumer silently rounds it.
json json_int(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

borel::Series parse_series(const std::string& type, int& rank_out) {
    if (type.empty()) throw borel::invalid_input("empty --type");
    const char letter = type[0];
    const std::string digits = type.substr(1);
    if (digits.empty() || digits.size() > 1 || digits[0] < '0' || digits[0] > '9')
        throw borel::invalid_input("unrecognized type '" + type + "' (expected a letter A/B/C/D/G/F and a rank digit, e.g. A2)");
    rank_out = digits[0] - '0';
    switch (letter) {
        case 'A': return borel::Series::A;
        case 'B': return borel::Series::B;
        case 'C': return borel::Series::C;
        case 'D': return borel::Series::D;
        case 'G': return borel::Series::G2;
        case 'F': return borel::Series::F4;
        default:
            throw borel::invalid_input("unrecognized series letter in type '" + type + "'");
    }
}

borel::Isogeny parse_isogeny(const std::string& name) {
    if (name == "sc" || name == "simply_connected") return borel::Isogeny::simply_connected;
    if (name == "adjoint") return borel::Isogeny::adjoint;
    if (name == "gl") return borel::Isogeny::gl;
    throw borel::invalid_input("unrecognized isogeny '" + name + "' (expected sc, simply_connected, adjoint, or gl)");
}

struct DatumArgs {
    std::string type;
    std::string isogeny = "simply_connected";
    std::string file;
    std::string format = "json";

    void attach(CLI::App* cmd, bool datum_optional = false) {
        cmd->add_option("--type", type, "built-in type: series letter + rank, e.g. A2, B3, G2");
        cmd->add_option("--isogeny", isogeny, "sc | simply_connected | adjoint | gl (default sc)");
        cmd->add_option("--file", file, "description file (.rd JSON) for a custom root datum");
        cmd->add_option("--format", format, "json | table (default json)")
            ->check(CLI::IsMember({"json", "table"}));
        (void)datum_optional;
    }

    bool has_datum_source() const { return !type.empty() || !file.empty(); }

    RootDatum datum() const {
        if (!file.empty()) {
            if (!type.empty())
                throw borel::invalid_input("give either --type or --file, not both");
            return borel::load_root_datum(file);
        }
        if (type.empty()) throw borel::invalid_input("missing --type (or --file)");
        int rank = 0;
        const borel::Series s = parse_series(type, rank);
        return borel::build_root_datum(s, rank, parse_isogeny(isogeny));
    }

    json echo(const RootDatum& rd) const {
        json in;
        if (!file.empty()) {
            in["file"] = file;
        } else {
            in["type"] = type;
            in["isogeny"] = borel::isogeny_name(parse_isogeny(isogeny));
        }
        in["label"] = rd.label();
        return in;
    }
};

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

json series_json(const TateSeries& s) {
    json coeffs = json::array();
    for (const auto& [j, m] : s.coefficients()) coeffs.push_back(json::array({j, m}));
    json out;
    out["coefficients"] = std::move(coeffs);
    out["truncation"] = s.is_exact() ? json(nullptr) : json(*s.truncation());
    out["upper_support"] = s.upper_support();
    return out;
}

json expansion_json(const WeylGroup& wg, const borel::SchubertExpansion& x) {
    json terms = json::array();
    for (const auto& [id, c] : x.coefficients) {
        std::string word;
        for (int i : wg.reduced_word(id)) {
            if (!word.empty()) word += '.';
            word += 's' + std::to_string(i);
        }
        json t;
        t["element"] = word.empty() ? "e" : "S[" + word + "]";
        t["length"] = wg.element(id).length;
        t["coefficient"] = json_int(c);
        terms.push_back(std::move(t));
    }
    json out;
    out["degree"] = x.degree;
    out["terms"] = std::move(terms);
    return out;
}

// The table rendering walks the finished JSON document, so both formats
// carry exactly the same numbers by construction.
void render_table(const json& v, const std::string& indent, std::ostream& os) {
    for (const auto& [key, val] : v.items()) {
        if (val.is_object()) {
            os << indent << key << ":\n";
            render_table(val, indent + "  ", os);
        } else if (val.is_array()) {
            os << indent << key << ": " << val.dump() << "\n";
        } else {
            os << indent << key << ": " << val.dump() << "\n";
        }
    }
}

void emit(const json& doc, const std::string& format) {
    if (format == "table")
        render_table(doc, "", std::cout);
    else
        std::cout << doc.dump(2) << "\n";
}

json make_document(const std::string& command, json input, json result) {
    json doc;
    doc["tool"] = "borel";
    doc["version"] = borel::kVersion;
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["result"] = std::move(result);
    return doc;
}

// ---------------------------------------------------------------- rootdatum

int cmd_rootdatum(const DatumArgs& args, const std::string& command) {
    const RootDatum rd = args.datum();
    json result;
    result["label"] = rd.label();
    result["lattice_rank"] = rd.lattice_rank();
    result["semisimple_rank"] = rd.semisimple_rank();
    result["simple_roots"] = rd.simple_roots();
    result["simple_coroots"] = rd.simple_coroots();
    result["cartan_matrix"] = rd.cartan();
    result["positive_roots"] = static_cast<int>(rd.positive_roots().size());
    try {
        WeylGroup wg(rd);
        result["weyl_order"] = wg.order();
        json degs = json::array();
        for (int d : borel::fundamental_degrees(wg)) degs.push_back(d);
        result["fundamental_degrees"] = std::move(degs);
    } catch (const borel::invalid_input& e) {
        result["weyl_order"] = nullptr;
        result["fundamental_degrees"] = nullptr;
        result["note"] = std::string("Weyl enumeration skipped: ") + e.what();
    }
    emit(make_document(command, args.echo(rd), std::move(result)), args.format);
    return 0;
}

// ------------------------------------------------------------------ torsion

int cmd_torsion(const DatumArgs& args, bool cross_check, const std::string& command) {
    const RootDatum rd = args.datum();
    WeylGroup wg(rd);
    const borel::TorsionReport rep = borel::torsion_index(wg);

    json result;
    result["torsion_index"] = json_int(rep.torsion_index);
    result["generators_examined"] = rep.generators_examined;
    json witnesses = json::array();
    for (const auto& w : rep.witnesses) {
        json jw;
        jw["prime"] = w.prime;
        jw["monomial"] = borel::Polynomial::monomial_string(w.monomial);
        jw["value"] = json_int(w.value);
        witnesses.push_back(std::move(jw));
    }
    result["witnesses"] = std::move(witnesses);

    if (cross_check) {
        const Int other = borel::torsion_index_via_chevalley(wg);
        json cc;
        cc["divided_difference_route"] = json_int(rep.torsion_index);
        cc["divisor_route"] = json_int(other);
        cc["agreement"] = (other == rep.torsion_index);
        result["cross_check"] = std::move(cc);
        if (other != rep.torsion_index)
            throw borel::internal_error("torsion routes disagree: " + rep.torsion_index.str() +
                                        " vs " + other.str());
    }

    json input = args.echo(rd);
    input["cross_check"] = cross_check;
    emit(make_document(command, std::move(input), std::move(result)), args.format);
    return 0;
}

// -------------------------------------------------------------------- split

int cmd_split(const DatumArgs& args, const std::string& invert, bool invert_given,
              long long mod_p, int cutoff, const std::string& command) {
    const RootDatum rd = args.datum();

    CoeffRing ring = CoeffRing::integers();
    if (mod_p > 0 && invert_given)
        throw borel::invalid_input("--invert and --mod-p are mutually exclusive");
    if (mod_p > 0) {
        ring = CoeffRing::prime_field(mod_p);
    } else if (invert_given && !invert.empty()) {
        std::vector<long long> primes;
        std::stringstream ss(invert);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t a = tok.find_first_not_of(" \t");
            size_t b = tok.find_last_not_of(" \t");
            if (a == std::string::npos) throw borel::invalid_input("--invert: empty entry in prime list");
            tok = tok.substr(a, b - a + 1);
            try {
                size_t used = 0;
                const long long p = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("trailing junk");
                primes.push_back(p);
            } catch (const std::exception&) {
                throw borel::invalid_input("--invert: '" + tok + "' is not an integer");
            }
        }
        ring = CoeffRing::with_inverted_primes(primes);
    }

    WeylGroup wg(rd);
    if (cutoff < 0) cutoff = 2 * rd.dim_flag();

    json result;
    result["ring"] = ring.describe();
    result["cutoff"] = cutoff;

    const borel::ChooseBasisOutcome chosen = borel::choose_basis(wg, ring);
    if (!chosen.ok()) {
        const borel::BasisFailure& f = *chosen.failure;
        json jf;
        jf["degree"] = f.degree;
        json divs = json::array();
        for (const Int& d : f.elementary_divisors) divs.push_back(json_int(d));
        jf["elementary_divisors"] = std::move(divs);
        jf["diagnosis"] = f.diagnosis;
        result["basis"] = nullptr;
        result["failure"] = std::move(jf);
        result["verdict"] = false;
        result["note"] = "basis selection failed at degree " + std::to_string(f.degree);
    } else {
        const borel::SplittingBasis& basis = *chosen.basis;
        json jb = json::array();
        for (size_t i = 0; i < basis.monomials.size(); ++i) {
            json e;
            e["monomial"] = borel::Polynomial::monomial_string(basis.monomials[i]);
            e["degree"] = basis.degrees[i];
            jb.push_back(std::move(e));
        }
        result["basis"] = std::move(jb);
        const borel::SplittingReport rep = borel::verify_splitting(wg, ring, cutoff, basis);
        json recs = json::array();
        for (const auto& r : rep.records) {
            json jr;
            jr["degree"] = r.degree;
            jr["rows"] = r.rows;
            jr["cols"] = r.cols;
            jr["determinant"] = json_int(r.det);
            jr["unit"] = r.unit;
            jr["pass"] = r.pass;
            recs.push_back(std::move(jr));
        }
        result["records"] = std::move(recs);
        result["verdict"] = rep.verdict;
        result["note"] = rep.note;
    }

    json input = args.echo(rd);
    input["ring"] = ring.describe();
    input["cutoff"] = cutoff;
    emit(make_document(command, std::move(input), std::move(result)), args.format);
    return 0;
}

// ------------------------------------------------------------------- motive

int cmd_motive(const DatumArgs& args, const std::string& mode, int trunc, int rank,
               const std::string& command) {
    json input;
    json result;
    result["mode"] = mode;

    if (mode == "bt" && rank > 0) {
        if (args.has_datum_source())
            throw borel::invalid_input("motive bt: give either --rank or a root datum, not both");
        input["rank"] = rank;
        result["series"] = series_json(borel::classifying_torus_motive(rank, trunc));
    } else {
        const RootDatum rd = args.datum();
        input = args.echo(rd);
        if (mode == "flag") {
            WeylGroup wg(rd);
            result["series"] = series_json(borel::flag_motive(wg));
        } else if (mode == "bt") {
            input["rank"] = rd.lattice_rank();
            result["series"] = series_json(borel::classifying_torus_motive(rd.lattice_rank(), trunc));
        } else if (mode == "bg") {
            WeylGroup wg(rd);
            try {
                result["series"] = series_json(borel::classifying_group_motive(wg, trunc));
            } catch (const borel::invalid_input& e) {
                const std::string what = e.what();
                if (what.find("does not divide") == std::string::npos) throw;
                result["series"] = nullptr;
                result["note"] = what;
            }
        } else if (mode == "check") {
            WeylGroup wg(rd);
            bool holds = false;
            std::string note;
            try {
                holds = borel::verify_motive_splitting(wg, trunc);
            } catch (const borel::invalid_input& e) {
                const std::string what = e.what();
                if (what.find("does not divide") == std::string::npos) throw;
                note = what;
            }
            result["identity_holds"] = holds;
            if (!note.empty()) result["note"] = note;
        } else {
            throw borel::invalid_input("unknown motive mode '" + mode + "' (expected flag, bt, bg, or check)");
        }
    }

    input["mode"] = mode;
    if (mode != "flag") input["truncation"] = trunc;
    emit(make_document(command, std::move(input), std::move(result)), args.format);
    return 0;
}

// ------------------------------------------------------------------ charmap

int cmd_charmap(const DatumArgs& args, const std::string& poly_text, bool cross_check,
                const std::string& command) {
    const RootDatum rd = args.datum();
    WeylGroup wg(rd);
    const borel::Polynomial f = borel::Polynomial::parse(poly_text, rd.lattice_rank());
    const borel::SchubertExpansion x = borel::characteristic_map(wg, f);

    json result;
    result["polynomial"] = f.to_string();
    result["expansion"] = expansion_json(wg, x);

    if (cross_check) {
        borel::SchubertExpansion other;
        other.degree = x.degree;
        for (const auto& [e, c] : f.terms()) {
            const borel::SchubertExpansion part = borel::characteristic_map_via_chevalley(wg, e);
            if (part.degree <= rd.dim_flag())
                for (const auto& [id, pc] : part.coefficients) other.add(id, c * pc);
        }
        const bool agree = (other == x);
        json cc;
        cc["divisor_route"] = expansion_json(wg, other);
        cc["agreement"] = agree;
        result["cross_check"] = std::move(cc);
        if (!agree) throw borel::internal_error("characteristic map routes disagree");
    }

    json input = args.echo(rd);
    input["polynomial"] = poly_text;
    emit(make_document(command, std::move(input), std::move(result)), args.format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert calculus, torsion indices, and motivic series for split reductive groups"};
    app.require_subcommand(1);

    DatumArgs rd_args;
    CLI::App* rd_cmd = app.add_subcommand("rootdatum", "build or load a root datum and describe it");
    rd_args.attach(rd_cmd);

    DatumArgs tor_args;
    bool tor_cross = false;
    CLI::App* tor_cmd = app.add_subcommand("torsion", "torsion index with witnesses");
    tor_args.attach(tor_cmd);
    tor_cmd->add_flag("--cross-check", tor_cross, "run the divisor-multiplication route too and compare");

    DatumArgs split_args;
    std::string split_invert;
    long long split_modp = 0;
    int split_cutoff = -1;
    CLI::App* split_cmd = app.add_subcommand("split", "coinvariant basis selection and degreewise verification");
    split_args.attach(split_cmd);
    CLI::Option* opt_invert =
        split_cmd->add_option("--invert", split_invert, "comma-separated primes to invert; \"\" for plain integers");
    CLI::Option* opt_modp = split_cmd->add_option("--mod-p", split_modp, "work over the prime field F_p");
    opt_invert->excludes(opt_modp);
    opt_modp->excludes(opt_invert);
    split_cmd->add_option("--cutoff", split_cutoff, "largest degree to verify (default: twice the positive-root count)");

    DatumArgs mot_args;
    std::string mot_mode;
    int mot_trunc = -16;
    int mot_rank = 0;
    CLI::App* mot_cmd = app.add_subcommand("motive", "Tate-series models: flag | bt | bg | check");
    mot_cmd->add_option("mode", mot_mode, "flag | bt | bg | check")->required();
    mot_args.attach(mot_cmd);
    mot_cmd->add_option("--trunc", mot_trunc, "truncation twist, coefficients known down to it (default -16)");
    mot_cmd->add_option("--rank", mot_rank, "torus rank for bt mode without --type/--file");

    DatumArgs cm_args;
    std::string cm_poly;
    bool cm_cross = false;
    CLI::App* cm_cmd = app.add_subcommand("charmap", "expand a polynomial in the Schubert basis");
    cm_args.attach(cm_cmd);
    cm_cmd->add_option("--poly", cm_poly, "homogeneous polynomial, e.g. \"x1^2 + 2*x1*x2\"")->required();
    cm_cmd->add_flag("--cross-check", cm_cross, "recompute via divisor multiplication and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const std::string command = join_args(argc, argv);
    const auto t0 = std::chrono::steady_clock::now();
    int status = 0;
    try {
        if (rd_cmd->parsed())
            status = cmd_rootdatum(rd_args, command);
        else if (tor_cmd->parsed())
            status = cmd_torsion(tor_args, tor_cross, command);
        else if (split_cmd->parsed())
            status = cmd_split(split_args, split_invert, opt_invert->count() > 0, split_modp,
                               split_cutoff, command);
        else if (mot_cmd->parsed())
            status = cmd_motive(mot_args, mot_mode, mot_trunc, mot_rank, command);
        else if (cm_cmd->parsed())
            status = cmd_charmap(cm_args, cm_poly, cm_cross, command);
    } catch (const borel::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const borel::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "time_ms: " << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << "\n";
    return status;
}
