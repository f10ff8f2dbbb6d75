#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdim/catalog.hpp"
#include "latdim/constructions.hpp"
#include "latdim/covers.hpp"
#include "latdim/dimensions.hpp"
#include "latdim/errors.hpp"
#include "latdim/search.hpp"
#include "latdim/serialize.hpp"

using namespace latdim;

namespace {

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

Lattice load(const std::string& path) { return lattice_from_string(slurp(path)); }

void emit(const nlohmann::json& j) { std::cout << dump_json(j); }

std::string display_name(const Lattice& l) { return l.name().empty() ? "(unnamed)" : l.name(); }

std::string joined(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += labels[i];
    }
    out += "}";
    return out;
}

// families sorted by index sequence so listing order is reproducible
std::vector<std::vector<std::string>> label_families(const Lattice& l,
                                                     const std::vector<ElementSet>& fams) {
    std::vector<Bits> bits;
    bits.reserve(fams.size());
    for (const auto& s : fams) bits.push_back(s.members());
    std::vector<std::vector<std::string>> out;
    for (const auto& f : sorted_index_families(bits)) {
        std::vector<std::string> row;
        row.reserve(f.size());
        for (auto i : f) row.push_back(l.label(static_cast<int>(i)));
        out.push_back(std::move(row));
    }
    return out;
}

std::string opt_cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void print_dims_table(const Lattice& l, const DimensionReport& r) {
    auto row = [](const char* key, const std::string& value) {
        std::cout << std::left << std::setw(14) << key << value << "\n";
    };
    row("name", r.name.empty() ? "(unnamed)" : r.name);
    row("elements", std::to_string(l.n()));
    row("height", std::to_string(r.height));
    row("ind_small", std::to_string(r.ind_small));
    row("ind_large", std::to_string(r.ind_large));
    row("dim_covering", std::to_string(r.dim_covering));
    row("kdim", r.kdim ? std::to_string(*r.kdim) : "-");
}

int cmd_fixtures_check() {
    int mismatches = 0;
    for (const Fixture& f : fixtures()) {
        std::vector<std::string> bad;
        DimensionReport r = full_report(f.lattice, 64);
        auto check_int = [&](const char* what, const std::optional<int>& want, int got) {
            if (want && *want != got)
                bad.push_back(std::string(what) + ": recorded " + std::to_string(*want) +
                              ", computed " + std::to_string(got));
        };
        check_int("ind_large", f.ind_large, r.ind_large);
        check_int("ind_small", f.ind_small, r.ind_small);
        check_int("dim_covering", f.dim_covering, r.dim_covering);
        check_int("height", f.height, r.height);
        if (f.kdim && (!r.kdim || *r.kdim != *f.kdim))
            bad.push_back("kdim: recorded " + std::to_string(*f.kdim) + ", computed " +
                          (r.kdim ? std::to_string(*r.kdim) : std::string("none")));
        if (f.minimal_cover_labels) {
            auto got = label_families(f.lattice, minimal_covers(f.lattice, 64));
            auto want = *f.minimal_cover_labels;
            for (auto& fam : want) std::sort(fam.begin(), fam.end());
            for (auto& fam : got) std::sort(fam.begin(), fam.end());
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            if (want != got) bad.push_back("minimal covers differ from the recorded families");
        }
        if (f.join_prime_labels) {
            auto got = join_primes(f.lattice).labels();
            auto want = *f.join_prime_labels;
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            if (want != got) bad.push_back("join primes differ from the recorded set");
        }
        if (bad.empty()) {
            std::cout << std::left << std::setw(10) << f.id << "ok\n";
        } else {
            ++mismatches;
            std::cout << std::left << std::setw(10) << f.id << "MISMATCH\n";
            for (const auto& line : bad) std::cout << "    " << line << "\n";
        }
    }
    if (mismatches) {
        std::cout << fixtures().size() << " fixtures, " << mismatches << " with mismatches\n";
        return 1;
    }
    std::cout << fixtures().size() << " fixtures, every recorded value reproduces\n";
    return 0;
}

void cmd_fixtures_list(bool as_json) {
    if (as_json) {
        auto arr = nlohmann::json::array();
        for (const Fixture& f : fixtures()) {
            nlohmann::json e;
            e["id"] = f.id;
            e["elements"] = f.lattice.n();
            auto put = [&](const char* key, const std::optional<int>& v) {
                e[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
            };
            put("ind_large", f.ind_large);
            put("ind_small", f.ind_small);
            put("dim_covering", f.dim_covering);
            put("kdim", f.kdim);
            put("height", f.height);
            arr.push_back(std::move(e));
        }
        emit(arr);
        return;
    }
    std::cout << std::left << std::setw(10) << "id" << std::right << std::setw(9) << "elements"
              << std::setw(10) << "ind_small" << std::setw(10) << "ind_large" << std::setw(13)
              << "dim_covering" << std::setw(6) << "kdim" << std::setw(8) << "height" << "\n";
    for (const Fixture& f : fixtures()) {
        std::cout << std::left << std::setw(10) << f.id << std::right << std::setw(9)
                  << f.lattice.n() << std::setw(10) << opt_cell(f.ind_small) << std::setw(10)
                  << opt_cell(f.ind_large) << std::setw(13) << opt_cell(f.dim_covering)
                  << std::setw(6) << opt_cell(f.kdim) << std::setw(8) << opt_cell(f.height)
                  << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite lattice toolkit: dimensions, covers, filters, products"};
    app.require_subcommand(1);
    int rc = 0;

    auto* validate = app.add_subcommand("validate", "parse a lattice file and report whether it is a bounded lattice");
    auto validate_file = std::make_shared<std::string>();
    validate->add_option("file", *validate_file, "lattice JSON file, or - for stdin")->required();
    validate->callback([validate_file] {
        Lattice l = load(*validate_file);
        std::cout << "ok: " << display_name(l) << " (" << l.n() << " elements, "
                  << l.hasse().size() << " cover pairs)\n";
    });

    auto* dims = app.add_subcommand("dims", "compute the dimension report of a lattice");
    auto dims_file = std::make_shared<std::string>();
    auto dims_json = std::make_shared<bool>(false);
    auto dims_limit = std::make_shared<int>(kDefaultEnumLimit);
    dims->add_option("file", *dims_file, "lattice JSON file, or - for stdin")->required();
    dims->add_flag("--json", *dims_json, "emit the machine-readable report");
    dims->add_option("--limit", *dims_limit, "size cap for cover enumeration");
    dims->callback([dims_file, dims_json, dims_limit] {
        Lattice l = load(*dims_file);
        DimensionReport r = full_report(l, *dims_limit);
        if (*dims_json)
            emit(report_to_json(r));
        else
            print_dims_table(l, r);
    });

    auto* covers = app.add_subcommand("covers", "list covering families of the top");
    auto covers_file = std::make_shared<std::string>();
    auto covers_minimal = std::make_shared<bool>(false);
    auto covers_json = std::make_shared<bool>(false);
    auto covers_limit = std::make_shared<int>(kDefaultEnumLimit);
    covers->add_option("file", *covers_file, "lattice JSON file, or - for stdin")->required();
    covers->add_flag("--minimal", *covers_minimal, "only minimal covers");
    covers->add_flag("--json", *covers_json, "emit label arrays instead of a listing");
    covers->add_option("--limit", *covers_limit, "size cap for cover enumeration");
    covers->callback([covers_file, covers_minimal, covers_json, covers_limit] {
        Lattice l = load(*covers_file);
        auto fams = *covers_minimal ? minimal_covers(l, *covers_limit)
                                    : all_covers(l, *covers_limit);
        auto rows = label_families(l, fams);
        if (*covers_json) {
            nlohmann::json arr = rows;
            emit(arr);
            return;
        }
        for (const auto& row : rows) std::cout << joined(row) << "\n";
        std::cout << rows.size() << (*covers_minimal ? " minimal covers\n" : " covers\n");
    });

    auto* filt = app.add_subcommand("filters", "list the proper filters");
    auto filt_file = std::make_shared<std::string>();
    auto filt_prime = std::make_shared<bool>(false);
    auto filt_json = std::make_shared<bool>(false);
    auto filt_limit = std::make_shared<int>(kDefaultEnumLimit);
    filt->add_option("file", *filt_file, "lattice JSON file, or - for stdin")->required();
    filt->add_flag("--prime", *filt_prime, "only prime filters");
    filt->add_flag("--json", *filt_json, "emit records instead of a listing");
    filt->add_option("--limit", *filt_limit, "size cap");
    filt->callback([filt_file, filt_prime, filt_json, filt_limit] {
        Lattice l = load(*filt_file);
        auto fs = *filt_prime ? prime_filters(l, *filt_limit) : filters(l, *filt_limit);
        if (*filt_json) {
            auto arr = nlohmann::json::array();
            for (const Filter& f : fs) {
                nlohmann::json e;
                e["generator"] = l.label(l.meet_of(f.members.members()));
                e["members"] = set_to_json(f.members);
                e["prime"] = f.prime;
                arr.push_back(std::move(e));
            }
            emit(arr);
            return;
        }
        for (const Filter& f : fs) {
            int g = l.meet_of(f.members.members());
            std::cout << "^" << l.label(g) << " = " << joined(f.members.labels())
                      << (f.prime ? "  prime" : "") << "\n";
        }
        std::cout << fs.size() << (*filt_prime ? " prime filters\n" : " filters\n");
    });

    auto* product = app.add_subcommand("product", "combine two lattices and emit the result");
    auto product_op = std::make_shared<std::string>();
    auto product_a = std::make_shared<std::string>();
    auto product_b = std::make_shared<std::string>();
    product->add_option("--op", *product_op, "sum, cartesian, lex, or rect")
        ->required()
        ->check(CLI::IsMember({"sum", "cartesian", "lex", "rect"}));
    product->add_option("A", *product_a, "first factor, or - for stdin")->required();
    product->add_option("B", *product_b, "second factor, or - for stdin")->required();
    product->callback([product_op, product_a, product_b] {
        Lattice a = load(*product_a);
        Lattice b = load(*product_b);
        Lattice p = *product_op == "sum"         ? linear_sum(a, b)
                    : *product_op == "cartesian" ? cartesian_product(a, b)
                    : *product_op == "lex"       ? lex_product(a, b)
                                                 : rect_product(a, b);
        emit(to_json(p));
    });

    auto* construct = app.add_subcommand("construct", "build a named lattice family member");
    construct->require_subcommand(1);
    auto* c_add_top = construct->add_subcommand("add-top", "append a fresh top to a lattice");
    auto add_top_file = std::make_shared<std::string>();
    c_add_top->add_option("file", *add_top_file, "lattice JSON file, or - for stdin")->required();
    c_add_top->callback([add_top_file] { emit(to_json(add_top(load(*add_top_file)))); });
    auto* c_ind_k = construct->add_subcommand("ind-k", "family member with small dimension 0 and large dimension k");
    auto ind_k_k = std::make_shared<int>();
    c_ind_k->add_option("k", *ind_k_k, "target large dimension")->required();
    c_ind_k->callback([ind_k_k] { emit(to_json(ind_k_family(*ind_k_k))); });
    auto* c_graft = construct->add_subcommand("graft-m", "grafted member with small dimension k-1 and large dimension k");
    auto graft_k = std::make_shared<int>();
    c_graft->add_option("k", *graft_k, "target large dimension")->required();
    c_graft->callback([graft_k] { emit(to_json(graft_m(*graft_k))); });

    auto* dot = app.add_subcommand("dot", "export the Hasse diagram as graphviz input");
    auto dot_file = std::make_shared<std::string>();
    auto dot_out = std::make_shared<std::string>();
    dot->add_option("file", *dot_file, "lattice JSON file, or - for stdin")->required();
    dot->add_option("--out", *dot_out, "write to a file instead of stdout");
    dot->callback([dot_file, dot_out] {
        std::string text = to_dot(load(*dot_file));
        if (dot_out->empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(*dot_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + *dot_out);
        out << text;
    });

    auto* fix = app.add_subcommand("fixtures", "list the bundled lattices and their recorded values");
    auto fix_check = std::make_shared<bool>(false);
    auto fix_json = std::make_shared<bool>(false);
    fix->add_flag("--check", *fix_check, "recompute every recorded value and fail on mismatch");
    fix->add_flag("--json", *fix_json, "emit the listing as JSON");
    fix->callback([fix_check, fix_json, &rc] {
        if (*fix_check)
            rc = cmd_fixtures_check();
        else
            cmd_fixtures_list(*fix_json);
    });

    auto* search = app.add_subcommand("search", "scan the catalog plus random lattices for gaps and violations");
    auto search_seed = std::make_shared<std::uint64_t>(0);
    auto search_max_n = std::make_shared<int>(7);
    auto search_samples = std::make_shared<int>(0);
    search->add_option("--seed", *search_seed, "random generator seed");
    search->add_option("--max-n", *search_max_n, "size bound for random lattices");
    search->add_option("--samples", *search_samples, "random lattices to draw; 0 scans the catalog only");
    search->callback([search_seed, search_max_n, search_samples, &rc] {
        SearchConfig cfg;
        cfg.seed = *search_seed;
        cfg.max_n = *search_max_n;
        cfg.samples = *search_samples;
        SearchReport rep = search_gaps(cfg);
        emit(report_to_json(rep));
        if (!rep.violations.empty()) rc = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const SizeLimit& e) {
        std::cerr << kind_name(e.kind()) << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
