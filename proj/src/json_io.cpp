#include "pgldpc/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pgldpc {

namespace {

OrderedJson int_vector_json(const std::vector<Int>& v) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw std::overflow_error("ray entry too large for JSON export");
        arr.push_back(x.get_si());
    }
    return arr;
}

std::string ints_spaced(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += v[i].get_str();
    }
    return s;
}

std::string bits_spaced(const Bitset& b) {
    std::string s;
    for (int i = 0; i < b.size(); ++i) {
        if (i) s += " ";
        s += b.test(i) ? "1" : "0";
    }
    return s;
}

}  // namespace

OrderedJson matrix_json(int q, const BinaryMatrix& H) {
    OrderedJson j;
    j["q"] = q;
    j["n"] = H.n;
    OrderedJson rows = OrderedJson::array();
    for (const auto& supp : H.row_supports) rows.push_back(supp);
    j["row_supports"] = rows;
    return j;
}

OrderedJson cone_json(int q, const ConeSystem& cone) {
    OrderedJson j;
    j["q"] = q;
    j["n"] = cone.n();
    OrderedJson list = OrderedJson::array();
    for (const auto& iq : cone.inequalities()) {
        OrderedJson e;
        if (iq.kind == Inequality::Kind::parity) {
            e["kind"] = "parity";
            e["row"] = iq.row;
            e["index"] = iq.index;
        } else {
            e["kind"] = "nonneg";
            e["index"] = iq.index;
        }
        list.push_back(e);
    }
    j["inequalities"] = list;
    return j;
}

OrderedJson rayset_json(const RaySet& rays) {
    OrderedJson j;
    j["n"] = rays.n;
    j["group_order_used"] = rays.group_order_used;
    OrderedJson list = OrderedJson::array();
    for (const auto& r : rays.rays) list.push_back(int_vector_json(r.canonical_int));
    j["rays"] = list;
    OrderedJson reps = OrderedJson::array();
    for (int idx : rays.orbit_reps)
        reps.push_back(int_vector_json(rays.rays[static_cast<std::size_t>(idx)].canonical_int));
    j["orbit_reps"] = reps;
    return j;
}

OrderedJson code_json(int q, const CodeSummary& code) {
    OrderedJson j;
    j["q"] = q;
    j["n"] = code.n;
    j["k"] = code.k;
    if (code.d_min)
        j["d_min"] = *code.d_min;
    else
        j["d_min"] = nullptr;
    OrderedJson mins = OrderedJson::array();
    for (const auto& w : code.minimal) mins.push_back(bits_spaced(w));
    j["minimal_codewords"] = mins;
    return j;
}

OrderedJson certificate_json(const BoundCertificate& cert) {
    OrderedJson j;
    j["bound_name"] = cert.bound_name;
    OrderedJson params;
    for (const auto& [k, v] : cert.parameters) params[k] = v;
    j["parameters"] = params;
    j["bound_value"] = to_fraction_string(cert.bound_value);
    j["witnesses"] = cert.witnesses;
    j["violations"] = cert.violations;
    j["passed"] = cert.passed();
    return j;
}

OrderedJson construction_json(const LineConstruction& c, const MinimalityCertificate* cert) {
    OrderedJson j;
    j["q"] = c.q;
    j["line_index"] = c.line_index;
    j["omega"] = int_vector_json(c.omega.canonical_int);
    j["pseudo_weight"] = to_fraction_string(c.claimed_weight);
    j["pseudo_weight_decimal"] = to_decimal_string(c.claimed_weight);
    if (cert) {
        OrderedJson cj;
        cj["tight_parity"] = cert->tight_parity;
        cj["tight_nonneg"] = cert->tight_nonneg;
        cj["product_zero"] = cert->product_zero;
        cj["aat_is_qI_plus_J"] = cert->aat_structure;
        cj["rank"] = cert->rank;
        cj["eigenvalue_repeated"] = cert->eig_repeated;
        cj["eigenvalue_simple"] = cert->eig_simple;
        cj["failures"] = cert->failures;
        cj["passed"] = cert->passed();
        j["certificate"] = cj;
    }
    return j;
}

std::string weight_enumerator_csv(const CodeSummary& code) {
    std::ostringstream out;
    out << "weight,count\n";
    for (const auto& [w, c] : code.weight_enumerator) out << w << "," << c << "\n";
    return out.str();
}

std::string spectrum_csv(const SpectrumReport& spec) {
    std::ostringstream out;
    out << "weight_fraction,weight_decimal,class,orbit_size,representative\n";
    for (const auto& e : spec.entries) {
        out << to_fraction_string(e.weight) << "," << to_decimal_string(e.weight) << ","
            << (e.is_codeword_multiple ? "codeword" : "non-codeword") << "," << e.orbit_size << ","
            << ints_spaced(e.ray.canonical_int) << "\n";
    }
    return out.str();
}

std::string sim_csv_header() { return "q,snr_db,trials,seed,ml_errors,ml_ties,ml_fer,lp_errors,lp_ties,lp_fer\n"; }

std::string sim_csv_row(const SimReport& rep) {
    std::ostringstream out;
    out << rep.q << "," << rep.snr_db << "," << rep.trials << "," << rep.seed << ",";
    if (rep.ran_ml)
        out << rep.ml_errors << "," << rep.ml_ties << "," << rep.ml_fer;
    else
        out << ",,";
    out << ",";
    if (rep.ran_lp)
        out << rep.lp_errors << "," << rep.lp_ties << "," << rep.lp_fer;
    else
        out << ",,";
    out << "\n";
    return out.str();
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pgldpc
