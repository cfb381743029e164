#include "descent/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "descent/bijection.hpp"
#include "descent/cyclic.hpp"
#include "descent/matching.hpp"
#include "descent/oscillating.hpp"
#include "descent/report_json.hpp"
#include "descent/symfun.hpp"

namespace descent {

namespace {

constexpr int kSizeGuard = 12;

enum class Codec { cycles, one_line, matching, tableau, oscillating };

Codec detect_codec(const std::string& text) {
    if (text.find(';') != std::string::npos) return Codec::oscillating;
    if (!text.empty() && text.front() == '(') return Codec::cycles;
    if (!text.empty() && text.front() == '[') return Codec::one_line;
    if (text.find('-') != std::string::npos) return Codec::matching;
    return Codec::tableau;
}

Codec codec_from_name(const std::string& name) {
    if (name == "cycles") return Codec::cycles;
    if (name == "oneline") return Codec::one_line;
    if (name == "matching") return Codec::matching;
    throw std::invalid_argument("--out must be one of cycles, oneline, matching");
}

int require_n(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string("--n is required for ") + what);
    return n;
}

Permutation parse_involution_text(const std::string& text, Codec codec, int n) {
    switch (codec) {
        case Codec::cycles:
            return parse_cycles(text, require_n(n, "cycle notation"));
        case Codec::matching:
            return to_involution(parse_matching(text, require_n(n, "matching notation")));
        case Codec::one_line: {
            Permutation p = parse_one_line(text);
            if (n >= 0 && p.size() != n) throw std::invalid_argument("one-line word has length different from --n");
            return p;
        }
        default:
            throw std::invalid_argument("expected an involution in cycle, one-line or matching notation");
    }
}

Permutation parse_involution_checked(const std::string& text, Codec codec, int n) {
    Permutation p = parse_involution_text(text, codec, n);
    if (!is_involution(p)) throw std::invalid_argument("input is not an involution");
    return p;
}

std::string format_as(const Permutation& p, Codec codec) {
    switch (codec) {
        case Codec::one_line:
            return format_one_line(p);
        case Codec::matching:
            return format_matching(from_involution(p));
        default:
            return format_cycles(p);
    }
}

// An ordered record printed either as key=value lines or as a JSON object.
using Record = std::vector<std::pair<std::string, Json>>;

std::string plain_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_record(const Record& rec, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json j = Json::object();
        for (const auto& [key, value] : rec) j[key] = value;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : rec) out << key << '=' << plain_value(value) << '\n';
}

void add_matching_stats(Record& rec, const Matching& m) {
    const StatTuple s = stats(m);
    rec.emplace_back("Des", s.des.to_string());
    rec.emplace_back("MDes", s.mdes.to_string());
    rec.emplace_back("cMDes", s.cmdes.to_string());
    rec.emplace_back("cr", s.cr);
    rec.emplace_back("ne", s.ne);
    rec.emplace_back("um", s.um);
    if (m.n() > 0) rec.emplace_back("cDes", cdes_involution(to_involution(m)).to_string());
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw std::invalid_argument("unsupported --format " + format);
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
    std::string perm, matching, involution, syt, oscillating, format = "plain";
    int n = -1;
};

void cmd_stats(const StatsArgs& a, std::ostream& out) {
    check_format(a.format, {"plain", "json"});
    const int given = !a.perm.empty() + !a.matching.empty() + !a.involution.empty() + !a.syt.empty() +
                      !a.oscillating.empty();
    if (given != 1) throw std::invalid_argument("stats needs exactly one of --perm, --matching, --involution, --syt, --oscillating");
    Record rec;
    if (!a.matching.empty() || !a.involution.empty()) {
        const Matching m = !a.matching.empty()
                               ? parse_matching(a.matching, require_n(a.n, "--matching"))
                               : from_involution(parse_involution_checked(a.involution, detect_codec(a.involution), a.n));
        rec.emplace_back("n", m.n());
        rec.emplace_back("matching", format_matching(m));
        rec.emplace_back("involution", format_cycles(to_involution(m)));
        add_matching_stats(rec, m);
    } else if (!a.perm.empty()) {
        const Permutation p = detect_codec(a.perm) == Codec::cycles ? parse_cycles(a.perm, require_n(a.n, "cycle notation"))
                                                                     : parse_one_line(a.perm);
        rec.emplace_back("n", p.size());
        rec.emplace_back("perm", format_one_line(p));
        rec.emplace_back("Des", des(p).to_string());
        if (p.size() > 0) rec.emplace_back("cDes_cellini", cellini_cdes(p).to_string());
        rec.emplace_back("Fix", fixed_points(p));
        rec.emplace_back("cycle_type", cycle_type(p).parts);
        rec.emplace_back("involution", is_involution(p));
        if (is_involution(p)) {
            const Matching m = from_involution(p);
            rec.emplace_back("MDes", mdes(m).to_string());
            rec.emplace_back("cr", crossing_number(m));
            rec.emplace_back("ne", nesting_number(m));
        }
    } else if (!a.syt.empty()) {
        const Tableau t = parse_tableau(a.syt);
        if (!t.is_standard()) throw std::invalid_argument("tableau is not standard");
        rec.emplace_back("n", t.size());
        rec.emplace_back("shape", format_shape(t.shape()));
        rec.emplace_back("Des", des(t).to_string());
        if (t.size() > 0) rec.emplace_back("cDes", cdes_syt(t).to_string());
        rec.emplace_back("height", t.height());
        rec.emplace_back("oc", t.shape().odd_cols());
    } else {
        const OscillatingTableau o = parse_oscillating(a.oscillating);
        rec.emplace_back("length", o.size());
        rec.emplace_back("kim_des", kim_des(o).to_string());
        rec.emplace_back("preimage", format_cycles(sundaram_inverse(o)));
    }
    emit_record(rec, a.format, out);
}

// ---------------------------------------------------------------- map

struct MapArgs {
    std::string name, object, out_codec;
    int n = -1;
    int k = -1;
};

void cmd_map(const MapArgs& a, std::ostream& out) {
    const Codec in = detect_codec(a.object);
    const Codec target = a.out_codec.empty() ? in : codec_from_name(a.out_codec);
    const std::string& name = a.name;

    if (name == "sundaram-inv") {
        if (in != Codec::oscillating) throw std::invalid_argument("sundaram-inv: expects an oscillating tableau");
        out << format_as(sundaram_inverse(parse_oscillating(a.object)),
                         a.out_codec.empty() ? Codec::cycles : target)
            << '\n';
        return;
    }
    if (name == "transpose") {
        if (in != Codec::oscillating) throw std::invalid_argument("transpose: expects an oscillating tableau");
        out << format_oscillating(transpose(parse_oscillating(a.object))) << '\n';
        return;
    }
    if (name == "p" && in == Codec::tableau) {
        const Tableau t = parse_tableau(a.object);
        if (!t.is_standard()) throw std::invalid_argument("p: tableau is not standard");
        out << format_tableau(p_map_syt(t)) << '\n';
        return;
    }
    if (name == "q") {
        if (in != Codec::one_line) throw std::invalid_argument("q: expects a one-line word");
        if (a.k < 0) throw std::invalid_argument("q: --k (number of large letters) is required");
        const ShuffleElement t(parse_one_line(a.object), a.k);
        out << format_as(q_map(t), target) << '\n';
        return;
    }

    const Permutation p = parse_involution_checked(a.object, in, a.n);
    if (name == "iota") {
        if (!fixed_points(p).empty()) throw std::invalid_argument("iota: requires a perfect matching (no fixed points)");
        out << format_as(chen_iota(p), target) << '\n';
    } else if (name == "iota-hat") {
        out << format_as(iota_hat(p), target) << '\n';
    } else if (name == "iota-hat-inv") {
        out << format_as(iota_hat_inverse(p), target) << '\n';
    } else if (name == "sundaram") {
        if (!fixed_points(p).empty()) throw std::invalid_argument("sundaram: requires a perfect matching (no fixed points)");
        out << format_oscillating(sundaram(p)) << '\n';
    } else if (name == "phi") {
        out << format_one_line(phi(p).word()) << '\n';
    } else if (name == "rotate") {
        out << format_as(to_involution(rotate(from_involution(p))), target) << '\n';
    } else if (name == "p") {
        out << format_as(p_map_involution(p), target) << '\n';
    } else if (name == "h") {
        out << format_tableau(h_map(p)) << '\n';
    } else {
        throw std::invalid_argument("unknown map " + name);
    }
}

// ---------------------------------------------------------------- enum

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

void emit_table(const std::vector<std::string>& header, const std::vector<Record>& rows, const std::string& format,
                std::ostream& out) {
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json j = Json::object();
            for (const auto& [key, value] : row) j[key] = value;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    const bool csv = format == "csv";
    const char sep = csv ? ',' : '\t';
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? std::string(1, sep) : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::string v = plain_value(row[i].second);
            out << (i ? std::string(1, sep) : "") << (csv ? csv_field(v) : v);
        }
        out << '\n';
    }
}

struct EnumArgs {
    std::string family, format = "plain", output;
    int n = -1, k = -1, j = -1;
};

Record matching_row(const char* key, const std::string& object, const Matching& m) {
    const StatTuple s = stats(m);
    return {{key, object},           {"des", s.des.to_string()}, {"mdes", s.mdes.to_string()},
            {"cmdes", s.cmdes.to_string()}, {"cr", s.cr},        {"ne", s.ne},
            {"um", s.um}};
}

void check_filters(int n, int k, int j) {
    if (n < 0) throw std::invalid_argument("--n is required");
    if (j >= 0 && k < 0) throw std::invalid_argument("--j requires --k");
    if (j >= 0) {
        check_nkj(n, k, j);
    } else if (k >= 0) {
        check_nk(n, k);
    }
}

void cmd_enum(const EnumArgs& a, std::ostream& out) {
    check_format(a.format, {"plain", "csv", "json"});
    check_filters(a.n, a.k, a.j);
    std::vector<int> ks;
    if (a.k >= 0) {
        ks.push_back(a.k);
    } else {
        for (int k = a.n % 2; k <= a.n; k += 2) ks.push_back(k);
    }
    std::vector<std::string> header;
    std::vector<Record> rows;
    if (a.family == "matchings" || a.family == "involutions") {
        const bool inv = a.family == "involutions";
        header = {inv ? "involution" : "matching", "des", "mdes", "cmdes", "cr", "ne", "um"};
        for (int k : ks) {
            const auto ground = a.j >= 0 ? enumerate_inkj(a.n, k, a.j) : enumerate_involutions(a.n, k);
            for (const auto& p : ground) {
                const Matching m = from_involution(p);
                rows.push_back(matching_row(header[0].c_str(), inv ? format_cycles(p) : format_matching(m), m));
            }
        }
    } else if (a.family == "syt") {
        header = {"syt", "shape", "des", "cdes", "height", "oc"};
        for (int k : ks) {
            const auto ground = a.j >= 0 ? enumerate_syt_nkj(a.n, k, a.j) : enumerate_syt_nk(a.n, k);
            for (const auto& t : ground) {
                rows.push_back({{"syt", format_tableau(t)},
                                {"shape", format_shape(t.shape())},
                                {"des", des(t).to_string()},
                                {"cdes", a.n > 0 ? cdes_syt(t).to_string() : std::string("{}")},
                                {"height", t.height()},
                                {"oc", t.shape().odd_cols()}});
            }
        }
    } else {
        throw std::invalid_argument("unknown family " + a.family + " (expected matchings, involutions or syt)");
    }
    emit_table(header, rows, a.format, out);
}

// ---------------------------------------------------------------- orbits

struct OrbitArgs {
    std::string format = "plain", output;
    int n = -1, k = -1, j = -1;
};

void cmd_orbits(const OrbitArgs& a, std::ostream& out) {
    check_format(a.format, {"plain", "json"});
    if (a.k < 0) throw std::invalid_argument("--k is required");
    check_filters(a.n, a.k, a.j);
    if (a.n == 0) throw std::invalid_argument("orbits needs --n >= 1");
    const auto ground = a.j >= 0 ? enumerate_inkj(a.n, a.k, a.j) : enumerate_involutions(a.n, a.k);
    const auto orbs = orbits(ground, p_map_involution);
    if (a.format == "json") {
        Json j;
        j["n"] = a.n;
        j["k"] = a.k;
        j["j"] = a.j < 0 ? Json(nullptr) : Json(a.j);
        j["orbits"] = Json::array();
        for (const auto& orbit : orbs) {
            Json elems = Json::array();
            for (const auto& p : orbit) {
                elems.push_back({{"involution", format_cycles(p)}, {"cdes", cdes_involution(p).to_string()}});
            }
            j["orbits"].push_back({{"size", orbit.size()}, {"elements", elems}});
        }
        out << j.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < orbs.size(); ++i) {
        out << "orbit " << i + 1 << " size " << orbs[i].size() << '\n';
        for (const auto& p : orbs[i]) out << "  " << format_cycles(p) << "  cDes=" << cdes_involution(p).to_string() << '\n';
    }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string identity, format = "json", output, pi, sigma;
    int n = -1, k = -1, j = -1, max = 7;
    bool force = false;
};

// Runs `one` for each k (all valid k when none given) and merges the results.
VerifyResult over_k(const std::string& identity, int n, int k, const std::function<VerifyResult(int, int)>& one) {
    if (k >= 0) return one(n, k);
    VerifyResult total;
    total.identity = identity;
    total.n = n;
    for (int kk = n % 2; kk <= n; kk += 2) {
        const VerifyResult r = one(n, kk);
        total.ok = total.ok && r.ok;
        total.elapsed_ms += r.elapsed_ms;
        for (const auto& [key, value] : r.counts) total.counts[key] += value;
        for (const auto& w : r.witness_diff) {
            if (total.witness_diff.size() < kWitnessCap) total.witness_diff.push_back("k=" + std::to_string(kk) + ": " + w);
        }
    }
    return total;
}

Json verify_cdes_json(const VerifyArgs& a) {
    if (a.k < 0) throw std::invalid_argument("cdes: --k is required");
    check_filters(a.n, a.k, a.j);
    if (a.n == 0) throw std::invalid_argument("cdes: needs --n >= 1");
    const auto start = std::chrono::steady_clock::now();
    const CdesReport inv = verify_cdes_involutions(a.n, a.k, a.j);
    const CdesReport syt = verify_cdes_syt(a.n, a.k, a.j);
    const bool non_escherian = a.j >= 0 ? classify_escherian(a.n, a.k, a.j) == Escher::non_escherian
                                        : (a.k > 0 && a.k < a.n);
    VerifyResult r;
    r.identity = "cdes";
    r.n = a.n;
    r.k = a.k;
    r.j = a.j;
    for (const CdesReport* rep : {&inv, &syt}) {
        const bool good = rep->extension_ok && rep->equivariance_ok && rep->non_escher_ok == non_escherian;
        if (!good) {
            r.ok = false;
            for (const auto& f : rep->failures) {
                if (r.witness_diff.size() < kWitnessCap) r.witness_diff.push_back(rep->set_id + " " + f);
            }
            if (rep->non_escher_ok != non_escherian && r.witness_diff.size() < kWitnessCap) {
                r.witness_diff.push_back(rep->set_id + " non-Escher outcome differs from classification");
            }
        }
        for (int size : rep->orbit_sizes) {
            if (a.n % size != 0) {
                r.ok = false;
                if (r.witness_diff.size() < kWitnessCap) {
                    r.witness_diff.push_back(rep->set_id + " orbit size " + std::to_string(size) + " does not divide n");
                }
            }
        }
    }
    r.counts = {{"involutions", static_cast<long>(inv.size)},
                {"tableaux", static_cast<long>(syt.size)},
                {"orbits", static_cast<long>(inv.orbit_sizes.size())}};
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.extra["classification"] = non_escherian ? to_string(Escher::non_escherian) : to_string(Escher::escherian);
    Json j = to_json(r);
    j["involutions"] = to_json(inv);
    j["tableaux"] = to_json(syt);
    return j;
}

Json run_verify(const VerifyArgs& a) {
    const std::string& id = a.identity;
    const int size = id == "gessel" && a.pi.empty() ? a.max : a.n;
    if (size > kSizeGuard && !a.force) {
        throw std::invalid_argument("refusing size " + std::to_string(size) + " > " + std::to_string(kSizeGuard) +
                         " without --force");
    }
    if (id == "cdes") return verify_cdes_json(a);
    if (id == "gessel") {
        if (a.pi.empty() != a.sigma.empty()) throw std::invalid_argument("gessel: give both --pi and --sigma, or neither");
        if (!a.pi.empty()) return to_json(verify_gessel(parse_one_line(a.pi), parse_one_line(a.sigma)));
        return to_json(verify_gessel_all(a.max));
    }
    const int n = require_n(a.n, id.c_str());
    if (id == "main0") return to_json(verify_main0(n));
    if (id == "main1") return to_json(verify_lemma_main1(n));
    if (id == "main11") return to_json(over_k(id, n, a.k, verify_main11));
    if (id == "main111") return to_json(over_k(id, n, a.k, verify_main111));
    if (id == "chen") return to_json(verify_chen(n));
    if (id == "sundaram-roundtrip") return to_json(verify_sundaram_roundtrip(n));
    if (id == "kim") return to_json(verify_kim(n));
    if (id == "roby") return to_json(verify_roby(n));
    throw std::invalid_argument("unknown identity " + id);
}

void emit_verify_plain(const Json& j, std::ostream& out) {
    out << j["identity"].get<std::string>();
    for (const char* key : {"n", "k", "j"}) {
        if (!j["params"][key].is_null()) out << ' ' << key << '=' << j["params"][key].dump();
    }
    out << ": " << (j["ok"].get<bool>() ? "ok" : "FAILED");
    if (j.contains("classification")) out << " (" << j["classification"].get<std::string>() << ")";
    out << '\n';
    for (const auto& w : j["witness_diff"]) out << "  " << w.get<std::string>() << '\n';
}

// Writes `body` to `path`, or to `out` when path is empty.
void deliver(const std::string& body, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path + " for writing");
    file << body;
}

// Oscillating tableaux start with "-;" and would be read as short options.
// As an option value they are attached with '='; as positionals they are
// moved behind a "--" separator.
std::vector<std::string> protect_dash_objects(const std::vector<std::string>& args) {
    if (std::find(args.begin(), args.end(), "--") != args.end()) return args;
    std::vector<std::string> kept, moved;
    for (const auto& a : args) {
        if (a.rfind("-;", 0) != 0) {
            kept.push_back(a);
        } else if (!kept.empty() && kept.back().rfind("--", 0) == 0 && kept.back().find('=') == std::string::npos) {
            kept.back() += "=" + a;
        } else {
            moved.push_back(a);
        }
    }
    if (moved.empty()) return kept;
    kept.push_back("--");
    kept.insert(kept.end(), moved.begin(), moved.end());
    return kept;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Descent statistics on matchings, involutions and standard Young tableaux", "descent"};
    app.require_subcommand(1);

    StatsArgs sa;
    auto* stats_cmd = app.add_subcommand("stats", "Print the statistics of one object");
    stats_cmd->add_option("--perm", sa.perm, "Permutation, one-line [..] or cycles (with --n)");
    stats_cmd->add_option("--matching", sa.matching, "Matching as a-b,c-d (with --n)");
    stats_cmd->add_option("--involution", sa.involution, "Involution in cycle, one-line or matching notation");
    stats_cmd->add_option("--syt", sa.syt, "Standard Young tableau, rows separated by /");
    stats_cmd->add_option("--oscillating", sa.oscillating, "Oscillating tableau, shapes separated by ;");
    stats_cmd->add_option("--n", sa.n, "Ground set size");
    stats_cmd->add_option("--format", sa.format, "plain or json");

    MapArgs ma;
    auto* map_cmd = app.add_subcommand("map", "Apply a named map to one object");
    map_cmd->add_option("name", ma.name,
                        "iota, iota-hat, iota-hat-inv, sundaram, sundaram-inv, transpose, phi, q, rotate, p, h")
        ->required();
    map_cmd->add_option("object", ma.object, "Input object; its notation selects the output notation")->required();
    map_cmd->add_option("--n", ma.n, "Ground set size (cycle and matching notation)");
    map_cmd->add_option("--k", ma.k, "Number of large letters (q only)");
    map_cmd->add_option("--out", ma.out_codec, "Override output notation: cycles, oneline, matching");

    EnumArgs ea;
    auto* enum_cmd = app.add_subcommand("enum", "List a family with its statistics");
    enum_cmd->add_option("family", ea.family, "matchings, involutions or syt")->required();
    enum_cmd->add_option("--n", ea.n, "Size")->required();
    enum_cmd->add_option("--k", ea.k, "Unmatched points / fixed points / odd columns");
    enum_cmd->add_option("--j", ea.j, "Nesting number / half height");
    enum_cmd->add_option("--format", ea.format, "plain, csv or json");
    enum_cmd->add_option("-o,--output", ea.output, "Write to a file instead of stdout");

    OrbitArgs oa;
    auto* orbits_cmd = app.add_subcommand("orbits", "Orbits of p on involutions with their cyclic descent sets");
    orbits_cmd->add_option("--n", oa.n, "Size")->required();
    orbits_cmd->add_option("--k", oa.k, "Fixed points")->required();
    orbits_cmd->add_option("--j", oa.j, "Nesting number");
    orbits_cmd->add_option("--format", oa.format, "plain or json");
    orbits_cmd->add_option("-o,--output", oa.output, "Write to a file instead of stdout");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Check an identity exhaustively");
    verify_cmd
        ->add_option("identity", va.identity,
                     "main1, main11, main111, main0, cdes, gessel, chen, sundaram-roundtrip, kim, roby")
        ->required();
    verify_cmd->add_option("--n", va.n, "Size");
    verify_cmd->add_option("--k", va.k, "Unmatched/fixed points (all valid values when omitted)");
    verify_cmd->add_option("--j", va.j, "Nesting number (cdes only)");
    verify_cmd->add_option("--max", va.max, "Largest total size (gessel)");
    verify_cmd->add_option("--pi", va.pi, "First permutation, one-line (gessel)");
    verify_cmd->add_option("--sigma", va.sigma, "Second permutation, one-line (gessel)");
    verify_cmd->add_flag("--force", va.force, "Allow sizes above 12");
    verify_cmd->add_option("--format", va.format, "json or plain");
    verify_cmd->add_option("-o,--output", va.output, "Write to a file instead of stdout");

    try {
        const auto protected_args = protect_dash_objects(args);
        std::vector<std::string> reversed(protected_args.rbegin(), protected_args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats_cmd->parsed()) {
            cmd_stats(sa, out);
        } else if (map_cmd->parsed()) {
            cmd_map(ma, out);
        } else if (enum_cmd->parsed()) {
            std::ostringstream body;
            cmd_enum(ea, body);
            deliver(body.str(), ea.output, out);
        } else if (orbits_cmd->parsed()) {
            std::ostringstream body;
            cmd_orbits(oa, body);
            deliver(body.str(), oa.output, out);
        } else if (verify_cmd->parsed()) {
            check_format(va.format, {"json", "plain"});
            const Json report = run_verify(va);
            std::ostringstream body;
            if (va.format == "json") {
                body << report.dump(2) << '\n';
            } else {
                emit_verify_plain(report, body);
            }
            deliver(body.str(), va.output, out);
            return report["ok"].get<bool>() ? kExitOk : kExitIdentityFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace descent
