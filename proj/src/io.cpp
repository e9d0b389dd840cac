#include "borwein/io.hpp"

#include <ostream>

namespace borwein {

Json series_to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (std::int64_t n = 0; n <= s.order(); ++n)
        coeffs.push_back(to_fraction_string(s[n]));
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void series_to_csv(const TruncatedSeries& s, std::ostream& out) {
    out << "n,numerator,denominator\n";
    for (std::int64_t n = 0; n <= s.order(); ++n)
        out << n << ',' << s[n].get_num().get_str() << ',' << s[n].get_den().get_str()
            << '\n';
}

Json estimate_to_json(const EstimateReport& r) {
    return Json{{"p", r.p},
                {"delta", to_fraction_string(r.delta)},
                {"n", r.n},
                {"terms", r.terms},
                {"exact", to_fraction_string(r.exact_coeff)},
                {"main_term", r.main_term.str(kPrintDigits)},
                {"error_bound", r.error_bound.str(kPrintDigits)},
                {"within_bound", r.within_bound},
                {"predicted_sign", r.predicted},
                {"actual_sign", r.actual}};
}

}  // namespace borwein
