#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cwres/json_io.hpp"

namespace fs = std::filesystem;
using namespace cwres;

namespace {

// exit codes: 0 success, 2 parse/input, 3 internal, 4 NotSupported,
// 5 NotRegular, 6 SearchExhausted, 7 PosetMismatch
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitNotSupported = 4;
constexpr int kExitNotRegular = 5;
constexpr int kExitSearchExhausted = 6;
constexpr int kExitPosetMismatch = 7;

Json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return Json::parse(in);
}

struct CommandResult {
    Json document;
    std::string text;
    int exit_code = 0;
};

int status_exit_code(const std::string& status) {
    if (status == "ok") return 0;
    if (status == "NotSupported") return kExitNotSupported;
    if (status == "NotRegular") return kExitNotRegular;
    if (status == "SearchExhausted") return kExitSearchExhausted;
    if (status == "PosetMismatch") return kExitPosetMismatch;
    return kExitInternal;
}

CommandResult run_resolve(const Json& ideal_json, Scalar p) {
    MonomialIdeal ideal = ideal_from_json(ideal_json);
    GradedFreeComplex res = minimize(taylor_complex(ideal, p));
    if (!is_complex(res) || !is_exact(res, ideal) || !is_minimal(res))
        throw Error("internal invariant failure: resolution checks failed");
    CommandResult out;
    out.document = Json{{"p", p}, {"betti", to_json(betti_table(res))}, {"resolution", to_json(res)}};
    out.text = betti_text(betti_table(res), ideal);
    return out;
}

CommandResult run_check_support(const Json& cw_json, const Json& ideal_json, Scalar p) {
    MonomialIdeal ideal = ideal_from_json(ideal_json);
    CWChainData data = cw_from_json(cw_json);
    GradedFreeComplex res = minimize(taylor_complex(ideal, p));
    SupportReport rep = check_supports_cw(data, res);
    CommandResult out;
    out.document = to_json(rep);
    out.document["p"] = p;
    out.text = rep.supported ? "supported\n"
                             : "not supported: " + rep.reason + " at degree " +
                                   std::to_string(rep.degree) + "\n";
    out.exit_code = rep.supported ? 0 : kExitNotSupported;
    return out;
}

CommandResult run_face_poset(const Json& cw_json, Scalar p) {
    CWChainData data = cw_from_json(cw_json);
    LabeledPoset poset = face_poset(data, p);
    CommandResult out;
    out.document = to_json(poset);
    out.document["p"] = p;
    std::ostringstream text;
    text << poset.elements.size() << " elements, " << poset.covers.size() << " covers\n";
    for (const auto& [lo, hi] : poset.covers) text << lo << " < " << hi << "\n";
    out.text = text.str();
    return out;
}

CommandResult run_find_basis(const Json& cw_json, Scalar p, const SearchOptions& opts) {
    CWChainData data = cw_from_json(cw_json);
    GradedFreeComplex res = homogenize(data, p);
    CommandResult out;
    try {
        MinimalBasisResult result = find_minimal_support_basis(res, opts);
        out.document = to_json(result);
        out.document["p"] = p;
        out.document["status"] = "ok";
        out.text = "found a minimal-support basis\n";
    } catch (const SearchExhausted& e) {
        out.document = Json{{"p", p}, {"status", "SearchExhausted"}, {"message", e.what()}};
        out.text = std::string(e.what()) + "\n";
        out.exit_code = kExitSearchExhausted;
    }
    return out;
}

CommandResult run_transform(const Json& cw_json, const Json& ideal_json, Scalar p,
                            const RunOptions& opts) {
    MonomialIdeal ideal = ideal_from_json(ideal_json);
    CWChainData data = cw_from_json(cw_json);
    Certificate cert = run_main_theorem(ideal, data, p, opts);
    CommandResult out;
    out.document = to_json(cert);
    out.text = "status: " + cert.status + " (stage " + cert.stage_reached + ")\n";
    out.exit_code = status_exit_code(cert.status);
    return out;
}

void emit(const CommandResult& result, const std::string& format, const std::string& out_path) {
    std::string doc = result.document.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << doc;
    }
    if (format == "json")
        std::cout << doc;
    else
        std::cout << result.text;
}

int run_corpus(const fs::path& data_dir, fs::path out_dir, bool update) {
    Json manifest = read_json_file(data_dir / "manifest.json");
    fs::path golden_dir = data_dir / "golden";
    if (update) out_dir = golden_dir;
    fs::create_directories(out_dir);
    bool all_ok = true;
    for (const Json& c : manifest.at("cases")) {
        std::string name = c.at("name").get<std::string>();
        std::string command = c.at("command").get<std::string>();
        Scalar p = c.at("p").get<Scalar>();
        CommandResult result;
        if (command == "resolve")
            result = run_resolve(read_json_file(data_dir / c.at("ideal").get<std::string>()), p);
        else if (command == "check-support")
            result = run_check_support(read_json_file(data_dir / c.at("cw").get<std::string>()),
                                       read_json_file(data_dir / c.at("ideal").get<std::string>()), p);
        else if (command == "face-poset")
            result = run_face_poset(read_json_file(data_dir / c.at("cw").get<std::string>()), p);
        else if (command == "find-basis")
            result = run_find_basis(read_json_file(data_dir / c.at("cw").get<std::string>()), p, {});
        else if (command == "transform")
            result = run_transform(read_json_file(data_dir / c.at("cw").get<std::string>()),
                                   read_json_file(data_dir / c.at("ideal").get<std::string>()), p, {});
        else
            throw Error("unknown corpus command '" + command + "'");

        std::string doc = result.document.dump(2) + "\n";
        fs::path out_file = out_dir / (name + ".json");
        {
            std::ofstream out(out_file, std::ios::binary);
            if (!out) throw Error("cannot write '" + out_file.string() + "'");
            out << doc;
        }
        if (update) {
            std::cout << "wrote " << name << "\n";
            continue;
        }
        std::ifstream gold(golden_dir / (name + ".json"), std::ios::binary);
        if (!gold) {
            std::cout << "MISSING " << name << "\n";
            all_ok = false;
            continue;
        }
        std::stringstream expected;
        expected << gold.rdbuf();
        if (expected.str() == doc) {
            std::cout << "ok " << name << "\n";
        } else {
            std::cout << "DIFF " << name << "\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain-level toolkit for CW-supported resolutions of monomial ideals"};
    app.require_subcommand(1);

    std::string ideal_path, cw_path, out_path;
    std::string format = "text";
    Scalar p = 2;
    bool stage2 = false;
    long bound = 200000;
    std::string corpus_data = "data/corpus", corpus_out = "corpus-out";
    bool corpus_update = false;

    auto add_common = [&](CLI::App* cmd, bool with_p = true) {
        if (with_p) cmd->add_option("--p", p, "prime characteristic")->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path, "write the JSON document to this path");
    };

    CLI::App* resolve = app.add_subcommand("resolve", "minimal free resolution and Betti table");
    resolve->add_option("ideal", ideal_path, "ideal JSON file")->required();
    add_common(resolve);

    CLI::App* check = app.add_subcommand("check-support", "does the CW data support the resolution?");
    check->add_option("cw", cw_path, "CW chain data JSON file")->required();
    check->add_option("ideal", ideal_path, "ideal JSON file")->required();
    add_common(check);

    CLI::App* poset = app.add_subcommand("face-poset", "face poset of CW data over GF(p)");
    poset->add_option("cw", cw_path, "CW chain data JSON file")->required();
    add_common(poset);

    CLI::App* find = app.add_subcommand("find-basis", "minimal-support basis of graded CW data");
    find->add_option("cw", cw_path, "CW chain data JSON file")->required();
    find->add_flag("--stage2", stage2, "allow contributions from smaller degrees");
    find->add_option("--bound", bound, "candidate enumeration bound")->check(CLI::PositiveNumber);
    add_common(find);

    CLI::App* transform = app.add_subcommand("transform", "run the full pipeline and emit a certificate");
    transform->add_option("cw", cw_path, "CW chain data JSON file")->required();
    transform->add_option("ideal", ideal_path, "ideal JSON file")->required();
    transform->add_flag("--stage2", stage2, "allow contributions from smaller degrees");
    transform->add_option("--bound", bound, "candidate enumeration bound")->check(CLI::PositiveNumber);
    add_common(transform);

    CLI::App* corpus = app.add_subcommand("corpus", "run the bundled corpus against golden outputs");
    corpus->add_option("--data", corpus_data, "corpus directory");
    corpus->add_option("--out", corpus_out, "output directory");
    corpus->add_flag("--update", corpus_update, "rewrite the golden outputs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus->parsed()) return run_corpus(corpus_data, corpus_out, corpus_update);

        CommandResult result;
        if (resolve->parsed())
            result = run_resolve(read_json_file(ideal_path), p);
        else if (check->parsed())
            result = run_check_support(read_json_file(cw_path), read_json_file(ideal_path), p);
        else if (poset->parsed())
            result = run_face_poset(read_json_file(cw_path), p);
        else if (find->parsed())
            result = run_find_basis(read_json_file(cw_path), p, {stage2, bound});
        else if (transform->parsed())
            result = run_transform(read_json_file(cw_path), read_json_file(ideal_path), p, {stage2, bound});
        emit(result, format, out_path);
        return result.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnknownVariable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GradingViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
