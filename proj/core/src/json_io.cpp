#include "belyi/json_io.hpp"

namespace belyi {

Json scalar_to_json(const Scalar& s) {
  if (s.d == 0) return to_string(s.a);
  Json j;
  j["a"] = to_string(s.a);
  j["b"] = to_string(s.b);
  j["d"] = s.d;
  return j;
}

Scalar scalar_from_json(const Json& j) {
  try {
    if (j.is_string()) return Scalar(rat_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(Rat(j.get<long>()));
    return Scalar(rat_from_string(j.at("a").get<std::string>()),
                  rat_from_string(j.at("b").get<std::string>()),
                  j.at("d").get<long>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("scalar: ") + e.what());
  }
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (long k = 0; k <= p.degree(); ++k) arr.push_back(scalar_to_json(p.coeff(k)));
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("poly: expected an array");
  std::vector<Scalar> coeffs;
  for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
  return Poly(std::move(coeffs));
}

namespace {

const char* kind_name(FiberEntry::Kind k) {
  switch (k) {
    case FiberEntry::Kind::Point: return "point";
    case FiberEntry::Kind::Infinity: return "infinity";
    case FiberEntry::Kind::PolyRoots: return "poly-roots";
    case FiberEntry::Kind::Aggregate: return "aggregate";
  }
  return "?";
}

Json fiber_to_json(const std::vector<FiberEntry>& fiber) {
  Json arr = Json::array();
  for (const auto& fe : fiber) {
    Json j;
    j["kind"] = kind_name(fe.kind);
    if (fe.kind == FiberEntry::Kind::Point) j["point"] = scalar_to_json(fe.point);
    if (fe.kind == FiberEntry::Kind::PolyRoots)
      j["roots_of"] = poly_to_json(fe.roots_of);
    j["count"] = fe.count;
    j["order"] = fe.order;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

Json certificate_to_json(const BelyiCertificate& c) {
  Json j;
  j["degree"] = c.degree;
  j["vanishing_order"] = c.vanishing_order;
  Json fibers;
  fibers["above_0"] = fiber_to_json(c.fibers[0]);
  fibers["above_1"] = fiber_to_json(c.fibers[1]);
  fibers["above_inf"] = fiber_to_json(c.fibers[2]);
  j["fibers"] = std::move(fibers);
  j["total_points"] = c.total_points;
  j["extra_vanishing"] = c.extra_vanishing;
  j["valid"] = c.valid;
  j["reason"] = c.reason;
  return j;
}

Json map_to_json(const BelyiMap& map, const BelyiCertificate& cert) {
  Json j;
  j["schema"] = 1;
  if (const auto* tl = std::get_if<TwoLinear>(&map.form)) {
    j["form"] = "two-linear";
    j["p"] = tl->p;
    j["q"] = tl->q;
    j["r"] = tl->r;
    j["m"] = tl->m;
    j["field"] = tl->lambda.d;
    j["lambda"] = scalar_to_json(tl->lambda);
  } else {
    const auto& oq = std::get<OneQuadratic>(map.form);
    j["form"] = "one-quadratic";
    j["p"] = oq.p;
    j["r"] = oq.r;
    j["m"] = oq.m;
    j["field"] = oq.alpha.d != 0 ? oq.alpha.d : oq.beta.d;
    j["alpha"] = scalar_to_json(oq.alpha);
    j["beta"] = scalar_to_json(oq.beta);
  }
  j["G"] = poly_to_json(map.G);
  j["certificate"] = certificate_to_json(cert);
  return j;
}

BelyiMap map_from_json(const Json& j) {
  try {
    BelyiMap map;
    std::string form = j.at("form").get<std::string>();
    if (form == "two-linear") {
      TwoLinear tl;
      tl.p = j.at("p").get<long>();
      tl.q = j.at("q").get<long>();
      tl.r = j.at("r").get<long>();
      tl.m = j.at("m").get<long>();
      tl.lambda = scalar_from_json(j.at("lambda"));
      map.form = tl;
    } else if (form == "one-quadratic") {
      OneQuadratic oq;
      oq.p = j.at("p").get<long>();
      oq.r = j.at("r").get<long>();
      oq.m = j.at("m").get<long>();
      oq.alpha = scalar_from_json(j.at("alpha"));
      oq.beta = scalar_from_json(j.at("beta"));
      map.form = oq;
    } else {
      throw ParseError("map: unknown form '" + form + "'");
    }
    map.G = poly_from_json(j.at("G"));
    return map;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("map: ") + e.what());
  }
}

Json point_to_json(const PointQ& P) {
  Json j;
  if (P.infinity) {
    j["infinity"] = true;
    return j;
  }
  j["u"] = to_string(P.u);
  j["v"] = to_string(P.v);
  return j;
}

PointQ point_from_json(const Json& j) {
  try {
    if (j.contains("infinity") && j.at("infinity").get<bool>())
      return PointQ::at_infinity();
    return PointQ(rat_from_string(j.at("u").get<std::string>()),
                  rat_from_string(j.at("v").get<std::string>()));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("point: ") + e.what());
  }
}

Json pell_candidate_to_json(const PellCandidate& c) {
  Json j;
  j["schema"] = 1;
  j["n"] = c.n;
  switch (c.family) {
    case PellFamily::Six: j["family"] = "six"; break;
    case PellFamily::TenUnitReduced: j["family"] = "ten-unit"; break;
    case PellFamily::TenNormPlus: j["family"] = "ten-norm-plus"; break;
    case PellFamily::TenNormMinus: j["family"] = "ten-norm-minus"; break;
  }
  j["m"] = c.m.get_str();
  j["z_roots"] = {to_string(c.z_roots.first), to_string(c.z_roots.second)};
  j["parity_valid"] = c.parity_valid;
  return j;
}

}  // namespace belyi
