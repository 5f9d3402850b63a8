#include "ekr/report.hpp"

namespace ekr {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Equality: return "equality";
        case Verdict::Fail: return "fail";
        case Verdict::OutOfRange: return "out_of_range";
    }
    return "?";
}

std::string LemmaParams::str() const {
    std::string s;
    auto app = [&s](const char* name, const std::optional<long>& v) {
        if (!v) return;
        if (!s.empty()) s += ",";
        s += name;
        s += "=";
        s += std::to_string(*v);
    };
    app("n", n);
    app("k", k);
    app("d", d);
    app("i", i);
    app("j", j);
    return s;
}

LemmaReport make_comparison_report(std::string lemma, LemmaParams params, BigRational lhs,
                                   BigRational rhs, bool geq) {
    LemmaReport r;
    r.lemma = std::move(lemma);
    r.params = params;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = geq ? ">=" : "<=";
    r.slack = geq ? BigRational(lhs - rhs) : BigRational(rhs - lhs);
    int c = cmp(r.slack, 0);
    r.verdict = c > 0 ? Verdict::Pass : (c == 0 ? Verdict::Equality : Verdict::Fail);
    return r;
}

LemmaReport make_identity_report(std::string lemma, LemmaParams params, BigRational lhs,
                                 BigRational rhs) {
    LemmaReport r;
    r.lemma = std::move(lemma);
    r.params = params;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = "==";
    r.slack = rhs - lhs;
    r.verdict = (lhs == rhs) ? Verdict::Equality : Verdict::Fail;
    return r;
}

}  // namespace ekr
