#include "reduct/report.hpp"

#include "reduct/parse.hpp"

namespace reduct {

std::string upoly_str(const UPoly& p) { return p.to_mpoly().str(); }

Json envelope(const std::string& command, const std::vector<MPoly>& inputs, Json result,
              const std::vector<std::string>& diagnostics) {
    Json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    Json in = Json::array();
    for (const auto& p : inputs) in.push_back(render(p));
    j["inputs"] = std::move(in);
    j["result"] = std::move(result);
    j["diagnostics"] = diagnostics;
    return j;
}

namespace {

Json cert_json(const TwistCertificate& c) {
    Json j;
    j["center"] = rat_str(c.center);
    j["base_constant"] = rat_str(c.base_constant);
    Json e = Json::object();
    for (const auto& [v, k] : c.exponents) e[v] = k;
    j["exponents"] = std::move(e);
    return j;
}

}  // namespace

Json classification_json(const ClassificationReport& rep) {
    Json j;
    j["case"] = case_name(rep.kind);
    switch (rep.kind) {
        case Case::I_unary:
            j["evidence"] = rep.evidence;
            break;
        case Case::II_vector_space: {
            Json g = Json::array();
            for (const auto& c : rep.generators) g.push_back(rat_str(c));
            j["generators"] = std::move(g);
            j["field"] = "Q";
            break;
        }
        case Case::III_twisted_mult: {
            const CommonTwist& t = *rep.twist;
            if (t.all_centers) {
                j["center"] = "all";
            } else if (t.unique_center) {
                j["center"] = rat_str(*t.unique_center);
            } else {
                j["center"] = nullptr;
            }
            j["witness"] = t.all_centers ? "0" : upoly_str(t.witness);
            Json cs = Json::array();
            for (const auto& r : t.centers) cs.push_back(rat_str(r));
            j["rational_centers"] = std::move(cs);
            Json certs = Json::array();
            for (const auto& c : rep.certificates) certs.push_back(cert_json(c));
            j["certificates"] = std::move(certs);
            break;
        }
        case Case::IV_full_field:
            j["evidence"] = rep.evidence;
            break;
    }
    return j;
}

namespace {

Json additive_json(const AdditiveDecomp& d) {
    Json j;
    j["f"] = upoly_str(d.f);
    j["u"] = upoly_str(d.u);
    j["v"] = upoly_str(d.v);
    if (d.strong) {
        Json s;
        s["u_common"] = upoly_str(d.strong->u_common);
        s["c1"] = rat_str(d.strong->c1);
        s["c2"] = rat_str(d.strong->c2);
        s["f_adjusted"] = upoly_str(d.strong->f_adjusted);
        j["strong"] = std::move(s);
    } else {
        j["strong"] = nullptr;
    }
    return j;
}

Json multiplicative_json(const MultiplicativeDecomp& d) {
    Json j;
    j["f"] = upoly_str(d.f);
    j["u"] = upoly_str(d.u);
    j["v"] = upoly_str(d.v);
    if (d.strong) {
        Json s;
        s["u0"] = upoly_str(d.strong->u0);
        s["m"] = d.strong->m;
        s["n"] = d.strong->n;
        s["f_adjusted"] = upoly_str(d.strong->f_adjusted);
        j["strong"] = std::move(s);
    } else {
        j["strong"] = nullptr;
    }
    return j;
}

}  // namespace

Json er_json(const ERVerdict& v) {
    Json j;
    j["tag"] = er_tag_name(v.tag);
    if (v.additive)
        j["certificate"] = additive_json(*v.additive);
    else if (v.multiplicative)
        j["certificate"] = multiplicative_json(*v.multiplicative);
    else
        j["certificate"] = nullptr;
    return j;
}

Json interdef_json(const InterdefReport& rep) {
    Json j;
    switch (rep.verdict) {
        case InterdefVerdict::yes: j["verdict"] = "yes"; break;
        case InterdefVerdict::no: j["verdict"] = "no"; break;
        case InterdefVerdict::undetermined_case_I: j["verdict"] = "undetermined_case_I"; break;
    }
    j["explanation"] = rep.explanation;
    j["left"] = classification_json(rep.left);
    j["right"] = classification_json(rep.right);
    return j;
}

Json family_json(const DefinableFamily& fam) {
    Json j;
    switch (fam.kind) {
        case UnaryCase::constant: j["case"] = "constant"; break;
        case UnaryCase::degree1: j["case"] = "degree1"; break;
        case UnaryCase::degree2: j["case"] = "degree2"; break;
        case UnaryCase::degree_ge3: j["case"] = "degree_ge3"; break;
    }
    Json m = Json::array();
    for (const auto& p : fam.members) m.push_back(upoly_str(p));
    j["members"] = std::move(m);
    j["includes_all_constants"] = fam.includes_all_constants;
    return j;
}

Json expansion_json(Family family, const std::vector<ExpansionRow>& rows) {
    Json j;
    j["family"] = family == Family::ap ? "ap" : family == Family::gp ? "gp" : "witness";
    Json rs = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["N"] = r.set_size;
        row["image_size"] = r.image;
        row["exponent"] = format_exponent(r.exponent);
        rs.push_back(std::move(row));
    }
    j["rows"] = std::move(rs);
    j["final_exponent"] = rows.empty() ? "" : format_exponent(rows.back().exponent);
    return j;
}

}  // namespace reduct
