#include "lgv/cli.hpp"

#include "lgv/dyck.hpp"
#include "lgv/network.hpp"
#include "lgv/network_json.hpp"
#include "lgv/partitions.hpp"
#include "lgv/reciprocity.hpp"
#include "lgv/recurrence.hpp"
#include "lgv/schur.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace lgv::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string base_name(const std::string& path) {
    auto pos = path.find_last_of("/\\");
    std::string name = pos == std::string::npos ? path : path.substr(pos + 1);
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") name.resize(name.size() - 5);
    return name;
}

PlanarNetwork load_network(const std::string& path) {
    return parse_network_file(read_file(path), base_name(path));
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty() || !parts.empty()) parts.push_back(cur);
    return parts;
}

/// "1,3" -> {1,3}; the empty string is the empty subset.
SubsetIndex parse_subset(const std::string& text, int m, const char* flag) {
    std::vector<int> elems;
    if (!text.empty()) {
        for (const auto& piece : split_commas(text)) {
            try {
                elems.push_back(std::stoi(piece));
            } catch (const std::exception&) {
                throw std::invalid_argument(std::string(flag) + ": bad index '" + piece + "'");
            }
        }
    }
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != elems)
        throw std::invalid_argument(std::string(flag) + ": indices must be increasing");
    return SubsetIndex(std::move(elems), m);
}

Partition parse_partition(const std::string& text, const char* flag) {
    std::vector<int> parts;
    if (!text.empty()) {
        for (const auto& piece : split_commas(text)) {
            try {
                parts.push_back(std::stoi(piece));
            } catch (const std::exception&) {
                throw std::invalid_argument(std::string(flag) + ": bad part '" + piece + "'");
            }
        }
    }
    return Partition(std::move(parts));
}

EvalPoint parse_eval_point(const std::string& text) {
    std::vector<Rational> vs;
    if (!text.empty())
        for (const auto& piece : split_commas(text)) vs.push_back(Rational::parse(piece));
    return EvalPoint(std::move(vs));
}

void print_value(std::ostream& out, bool json, const Rational& v) {
    if (json) {
        ordered_json j;
        j["value"] = v.str();
        out << j.dump() << "\n";
    } else {
        out << v.str() << "\n";
    }
}

void print_matrix_text(std::ostream& out, const Matrix& m) {
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            width[static_cast<std::size_t>(c)] =
                std::max(width[static_cast<std::size_t>(c)], m(r, c).str().size());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << "  ";
            out << std::setw(static_cast<int>(width[static_cast<std::size_t>(c)])) << std::left
                << m(r, c).str();
        }
        out << "\n";
    }
}

int cmd_validate(const std::string& file, bool json, std::ostream& out) {
    const PlanarNetwork net = load_network(file);
    const auto& report = net.validation();
    if (json) {
        ordered_json j;
        j["valid"] = report.ok();
        j["violations"] = ordered_json::array();
        for (const auto& v : report.violations) j["violations"].push_back(v.message);
        out << j.dump() << "\n";
    } else if (report.ok()) {
        out << "valid\n";
    } else {
        out << "invalid:\n";
        for (const auto& v : report.violations) out << "  - " << v.message << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_path_matrix(const std::string& file, bool json, std::ostream& out) {
    const Matrix p = path_matrix(load_network(file));
    if (json)
        out << matrix_to_json(p) << "\n";
    else
        print_matrix_text(out, p);
    return 0;
}

int cmd_count(const std::string& file, const std::string& srcs, const std::string& snks,
              long long n, bool json, std::ostream& out) {
    const PlanarNetwork net = load_network(file);
    net.ensure_valid();
    ReciprocityEngine engine(net);
    const SubsetIndex I = parse_subset(srcs, engine.boundary_size(), "--sources");
    const SubsetIndex J = parse_subset(snks, engine.boundary_size(), "--sinks");
    const Rational v = n >= 0 ? engine.f_value(I, J, n) : engine.f_negative(I, J, -n);
    print_value(out, json, v);
    return 0;
}

int cmd_oracle(const std::string& file, const std::string& srcs, const std::string& snks,
               long long n, bool json, std::ostream& out) {
    const PlanarNetwork net = load_network(file);
    net.ensure_valid();
    if (n < 0) throw std::invalid_argument("oracle: n must be nonnegative");
    const SubsetIndex I = parse_subset(srcs, net.boundary_size(), "--sources");
    const SubsetIndex J = parse_subset(snks, net.boundary_size(), "--sinks");
    const PlanarNetwork glued = glue_power(net, static_cast<int>(n));
    print_value(out, json, oracle_nonintersecting_sum(glued, I, J));
    return 0;
}

int cmd_recurrence(const std::string& file, const std::string& srcs, const std::string& snks,
                   bool json, std::ostream& out) {
    const PlanarNetwork net = load_network(file);
    net.ensure_valid();
    ReciprocityEngine engine(net);
    const SubsetIndex I = parse_subset(srcs, engine.boundary_size(), "--sources");
    const SubsetIndex J = parse_subset(snks, engine.boundary_size(), "--sinks");
    const LinearRecurrence rec = engine.f_recurrence(I, J);
    const RationalGF gf = rec.generating_function();
    if (json) {
        ordered_json j;
        j["order"] = rec.order();
        j["alpha"] = ordered_json::array();
        for (const auto& a : rec.coefficients()) j["alpha"].push_back(a.str());
        j["initial"] = ordered_json::array();
        for (const auto& v : rec.initial_values()) j["initial"].push_back(v.str());
        ordered_json jg;
        jg["numerator"] = ordered_json::array();
        for (const auto& c : gf.numerator.coeffs()) jg["numerator"].push_back(c.str());
        jg["denominator"] = ordered_json::array();
        for (const auto& c : gf.denominator.coeffs()) jg["denominator"].push_back(c.str());
        j["generating_function"] = std::move(jg);
        out << j.dump() << "\n";
    } else {
        out << "order: " << rec.order() << "\n";
        out << "alpha:";
        for (const auto& a : rec.coefficients()) out << " " << a.str();
        out << "\n";
        out << "initial:";
        for (const auto& v : rec.initial_values()) out << " " << v.str();
        out << "\n";
        out << "F(x) = (" << gf.numerator.str() << ") / (" << gf.denominator.str() << ")\n";
    }
    return 0;
}

int cmd_check(const std::string& file, const std::string& srcs, const std::string& snks,
              int n_max, bool json, std::ostream& out) {
    const PlanarNetwork net = load_network(file);
    net.ensure_valid();
    ReciprocityEngine engine(net);
    const SubsetIndex I = parse_subset(srcs, engine.boundary_size(), "--sources");
    const SubsetIndex J = parse_subset(snks, engine.boundary_size(), "--sinks");
    const ReciprocityReport rep = engine.check(I, J, n_max);
    if (json) {
        ordered_json j;
        j["network"] = rep.network;
        j["I"] = rep.I.elements;
        j["J"] = rep.J.elements;
        j["det"] = rep.det.str();
        j["rows"] = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json jr;
            jr["n"] = row.n;
            jr["lhs"] = row.f_neg.str();
            jr["sign"] = row.sign;
            jr["det_pow"] = row.det_pow_neg.str();
            jr["complementary"] = row.f_comp.str();
            jr["pass"] = row.pass;
            j["rows"].push_back(std::move(jr));
        }
        j["pass"] = rep.all_pass;
        out << j.dump() << "\n";
    } else {
        out << "network: " << rep.network << "\n";
        out << "I = " << rep.I.str() << ", J = " << rep.J.str() << ", det(P) = " << rep.det.str()
            << ", sign = " << (rep.rows.empty() || rep.rows[0].sign > 0 ? "+1" : "-1") << "\n";
        out << "  n  f(I,J;-n)  sign*det^-n*f(Jc,Ic;n)  pass\n";
        for (const auto& row : rep.rows) {
            const Rational rhs = Rational(row.sign) * row.det_pow_neg * row.f_comp;
            out << "  " << row.n << "  " << row.f_neg.str() << "  " << rhs.str() << "  "
                << (row.pass ? "yes" : "NO") << "\n";
        }
        out << (rep.all_pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.all_pass ? 0 : 1;
}

int cmd_dyck(int m, int k, long long n, bool json, std::ostream& out) {
    print_value(out, json, d_value(m, k, n));
    return 0;
}

int cmd_dyck_check(int m, int k, int n_max, bool json, std::ostream& out) {
    const DyckReciprocityReport rep = check_dyck_reciprocity(m, k, n_max);
    if (json) {
        ordered_json j;
        j["m"] = rep.m;
        j["k"] = rep.k;
        j["rows"] = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json jr;
            jr["n"] = row.n;
            jr["lhs"] = row.lhs.str();
            jr["rhs"] = row.rhs.str();
            jr["pass"] = row.pass;
            j["rows"].push_back(std::move(jr));
        }
        j["pass"] = rep.all_pass;
        out << j.dump() << "\n";
    } else {
        out << "d(" << rep.m << "," << rep.k << ";-n) = d(" << rep.k << "," << rep.m
            << ";n+1)\n";
        out << "  n  lhs  rhs  pass\n";
        for (const auto& row : rep.rows)
            out << "  " << row.n << "  " << row.lhs.str() << "  " << row.rhs.str() << "  "
                << (row.pass ? "yes" : "NO") << "\n";
        out << (rep.all_pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.all_pass ? 0 : 1;
}

int cmd_schur(const std::string& lambda_s, const std::string& mu_s, const std::string& z_s,
              long long n, bool json, std::ostream& out) {
    const SkewShape shape(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
    const EvalPoint z = parse_eval_point(z_s);
    if (z.k() < 1) throw std::invalid_argument("--z: need at least one value");
    print_value(out, json, schur_eval(shape, z, n));
    return 0;
}

int cmd_schur_check(const std::string& lambda_s, const std::string& mu_s, const std::string& z_s,
                    int n_max, bool json, std::ostream& out) {
    const SkewShape shape(parse_partition(lambda_s, "--lambda"), parse_partition(mu_s, "--mu"));
    const EvalPoint z = parse_eval_point(z_s);
    if (z.k() < 1) throw std::invalid_argument("--z: need at least one value");
    const SchurReciprocityReport rep = check_schur_reciprocity(shape, z, n_max);
    if (json) {
        ordered_json j;
        j["shape"] = rep.shape.str();
        j["rows"] = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json jr;
            jr["n"] = row.n;
            jr["lhs"] = row.lhs.str();
            jr["rhs"] = row.rhs.str();
            jr["rhs_unreversed"] = row.rhs_unrev.str();
            jr["pass"] = row.pass;
            j["rows"].push_back(std::move(jr));
        }
        j["pass"] = rep.all_pass;
        out << j.dump() << "\n";
    } else {
        out << "shape: " << rep.shape.str() << "\n";
        out << "  n  s(z^-n)  (-1)^|shape| s^t(z_rev^n)  unreversed  pass\n";
        for (const auto& row : rep.rows)
            out << "  " << row.n << "  " << row.lhs.str() << "  " << row.rhs.str() << "  "
                << row.rhs_unrev.str() << "  " << (row.pass ? "yes" : "NO") << "\n";
        out << (rep.all_pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.all_pass ? 0 : 1;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact non-intersecting path counts on glued planar networks, "
                 "with negative-index extension and reciprocity checks"};
    app.require_subcommand(1);

    std::string file, sources_s, sinks_s, lambda_s, mu_s, z_s;
    long long n = 0;
    int n_max = 5, m_arg = 0, k_arg = 0;
    bool json = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "machine-readable output"); };

    auto* sub_validate = app.add_subcommand("validate", "check a network file's invariants");
    sub_validate->add_option("file", file)->required();
    add_json(sub_validate);

    auto* sub_pm = app.add_subcommand("path-matrix", "print the weighted path matrix");
    sub_pm->add_option("file", file)->required();
    add_json(sub_pm);

    auto* sub_count = app.add_subcommand(
        "count", "f(I,J;n): weighted non-intersecting tuples in the n-th glued power");
    sub_count->add_option("file", file)->required();
    sub_count->add_option("--sources", sources_s, "1-based source indices, e.g. 1,3")->required();
    sub_count->add_option("--sinks", sinks_s, "1-based sink indices")->required();
    sub_count->add_option("--n", n, "glued power; negative needs det != 0")->required();
    add_json(sub_count);

    auto* sub_rec = app.add_subcommand("recurrence", "linear recurrence satisfied by f(I,J;n)");
    sub_rec->add_option("file", file)->required();
    sub_rec->add_option("--sources", sources_s)->required();
    sub_rec->add_option("--sinks", sinks_s)->required();
    add_json(sub_rec);

    auto* sub_check = app.add_subcommand("check", "reciprocity report for f(I,J;-n)");
    sub_check->add_option("file", file)->required();
    sub_check->add_option("--sources", sources_s)->required();
    sub_check->add_option("--sinks", sinks_s)->required();
    sub_check->add_option("--nmax", n_max)->required();
    add_json(sub_check);

    auto* sub_oracle = app.add_subcommand("oracle", "brute-force non-intersecting tuple sum");
    sub_oracle->add_option("file", file)->required();
    sub_oracle->add_option("--sources", sources_s)->required();
    sub_oracle->add_option("--sinks", sinks_s)->required();
    sub_oracle->add_option("--n", n)->required();
    add_json(sub_oracle);

    auto* sub_dyck = app.add_subcommand("dyck", "d(m,k;n): m-fans of (2k+1)-bounded Dyck paths");
    sub_dyck->add_option("--m", m_arg)->required();
    sub_dyck->add_option("--k", k_arg)->required();
    sub_dyck->add_option("--n", n)->required();
    add_json(sub_dyck);

    auto* sub_dyck_check = app.add_subcommand("dyck-check", "d(m,k;-n) = d(k,m;n+1)");
    sub_dyck_check->add_option("--m", m_arg)->required();
    sub_dyck_check->add_option("--k", k_arg)->required();
    sub_dyck_check->add_option("--nmax", n_max)->required();
    add_json(sub_dyck_check);

    auto* sub_schur = app.add_subcommand("schur", "skew Schur evaluation s_{lambda/mu}(z^n)");
    sub_schur->add_option("--lambda", lambda_s, "outer partition, e.g. 3,2");
    sub_schur->add_option("--mu", mu_s, "inner partition");
    sub_schur->add_option("--z", z_s, "evaluation point, e.g. 1,1/2")->required();
    sub_schur->add_option("--n", n)->required();
    add_json(sub_schur);

    auto* sub_schur_check = app.add_subcommand("schur-check",
                                               "s(z^-n) = (-1)^|shape| s^t(z_rev^n)");
    sub_schur_check->add_option("--lambda", lambda_s);
    sub_schur_check->add_option("--mu", mu_s);
    sub_schur_check->add_option("--z", z_s)->required();
    sub_schur_check->add_option("--nmax", n_max)->required();
    add_json(sub_schur_check);

    auto* sub_proctor = app.add_subcommand(
        "proctor", "plane partitions of staircase shape delta_n with entries in 0..m");
    sub_proctor->add_option("--n", n)->required();
    sub_proctor->add_option("--m", m_arg)->required();
    add_json(sub_proctor);

    try {
        // CLI11's vector overload consumes the arguments back to front
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sub_validate->parsed()) return cmd_validate(file, json, out);
        if (sub_pm->parsed()) return cmd_path_matrix(file, json, out);
        if (sub_count->parsed()) return cmd_count(file, sources_s, sinks_s, n, json, out);
        if (sub_oracle->parsed()) return cmd_oracle(file, sources_s, sinks_s, n, json, out);
        if (sub_rec->parsed()) return cmd_recurrence(file, sources_s, sinks_s, json, out);
        if (sub_check->parsed()) return cmd_check(file, sources_s, sinks_s, n_max, json, out);
        if (sub_dyck->parsed()) return cmd_dyck(m_arg, k_arg, n, json, out);
        if (sub_dyck_check->parsed()) return cmd_dyck_check(m_arg, k_arg, n_max, json, out);
        if (sub_schur->parsed()) return cmd_schur(lambda_s, mu_s, z_s, n, json, out);
        if (sub_schur_check->parsed())
            return cmd_schur_check(lambda_s, mu_s, z_s, n_max, json, out);
        if (sub_proctor->parsed()) {
            print_value(out, json, proctor_count(static_cast<int>(n), m_arg));
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace lgv::cli
