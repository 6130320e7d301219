#include "chaoscalc/natset.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <limits>
#include <sstream>

namespace chaoscalc::natset {

namespace {

constexpr Int kNoValue = -1;

Int checked_mul(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<Int>::max() / b) return kNoValue;
  return a * b;
}

Int checked_add(Int a, Int b) {
  if (a > std::numeric_limits<Int>::max() - b) return kNoValue;
  return a + b;
}

}  // namespace

Int BlockRule::position(Int k) const {
  if (pos == Pos::Geometric) {
    Int p = scale;
    for (Int i = 0; i < k; ++i) {
      p = checked_mul(p, param);
      if (p == kNoValue) return kNoValue;
    }
    return p;
  }
  Int p = scale;
  for (Int i = 0; i < param; ++i) {
    p = checked_mul(p, k);
    if (p == kNoValue) return kNoValue;
  }
  return p;
}

Int BlockRule::length(Int k) const {
  switch (len) {
    case Len::Constant:
      return len_const;
    case Len::Linear:
      return k;
    case Len::SuperExp: {
      if (k >= 62) return kNoValue;
      return checked_mul(k, Int(1) << k);
    }
  }
  return kNoValue;
}

std::vector<std::pair<Int, Int>> BlockRule::blocks_below(Int limit) const {
  std::vector<std::pair<Int, Int>> out;
  Int prev_end = 0;
  for (Int k = 1;; ++k) {
    Int a = position(k);
    if (a == kNoValue || a > limit) break;
    Int l = length(k);
    if (l == kNoValue) break;
    Int b = checked_add(a, l - 1);
    if (b == kNoValue) break;
    if (a <= prev_end)
      throw std::invalid_argument("block family not disjoint at k=" + std::to_string(k));
    out.emplace_back(a, b);
    prev_end = b;
  }
  return out;
}

bool BlockRule::contains(Int n) const {
  if (n < 1) return false;
  // Invert the position rule to find the only block index that could cover n,
  // then check it and its neighbour.
  Int k_guess = 1;
  if (pos == Pos::Geometric) {
    double lg = std::log(double(n) / double(scale)) / std::log(double(param));
    k_guess = std::max<Int>(1, Int(std::floor(lg)));
  } else {
    double root = std::pow(double(n) / double(scale), 1.0 / double(param));
    k_guess = std::max<Int>(1, Int(std::floor(root)));
  }
  for (Int k = std::max<Int>(1, k_guess - 2); k <= k_guess + 2; ++k) {
    Int a = position(k);
    if (a == kNoValue || a > n) continue;
    Int l = length(k);
    if (l == kNoValue) continue;
    Int b = a + l - 1;
    if (n >= a && n <= b) return true;
  }
  return false;
}

void BlockRule::validate() const {
  if (scale < 1) throw std::invalid_argument("block scale must be >= 1");
  if (pos == Pos::Geometric && param < 2)
    throw std::invalid_argument("geometric ratio must be >= 2");
  if (pos == Pos::Polynomial && param < 1)
    throw std::invalid_argument("polynomial exponent must be >= 1");
  if (len == Len::Constant && len_const < 1)
    throw std::invalid_argument("constant block length must be >= 1");
  // Probe for overlap.  For the supported rules an overlapping family shows
  // it within the first ~10^6 blocks; geometric families exhaust Int range in
  // ~60 blocks anyway.
  Int prev_end = 0;
  for (Int k = 1; k <= 1000000; ++k) {
    Int a = position(k);
    if (a == kNoValue || a > (Int(1) << 40)) break;
    Int l = length(k);
    if (l == kNoValue) break;
    Int b = checked_add(a, l - 1);
    if (b == kNoValue) break;
    if (a <= prev_end)
      throw std::invalid_argument("block family not disjoint at k=" + std::to_string(k));
    prev_end = b;
  }
}

SetExprPtr SetExpr::finite(std::vector<Int> elements) {
  for (Int e : elements)
    if (e < 1) throw std::invalid_argument("finite set elements must be >= 1");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Finite;
  e->elements_ = std::move(elements);
  return e;
}

SetExprPtr SetExpr::periodic(Int modulus, std::vector<Int> residues) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  std::sort(residues.begin(), residues.end());
  if (std::unique(residues.begin(), residues.end()) != residues.end())
    throw std::invalid_argument("duplicate residues");
  for (Int r : residues)
    if (r < 0 || r >= modulus) throw std::invalid_argument("residue outside [0, m)");
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Periodic;
  e->modulus_ = modulus;
  e->elements_ = std::move(residues);
  return e;
}

SetExprPtr SetExpr::blocks(BlockRule rule) {
  rule.validate();
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Blocks;
  e->rule_ = rule;
  return e;
}

SetExprPtr SetExpr::set_union(SetExprPtr left, SetExprPtr right) {
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Union;
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

SetExprPtr SetExpr::set_intersection(SetExprPtr left, SetExprPtr right) {
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Intersection;
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

SetExprPtr SetExpr::complement(SetExprPtr inner) {
  auto e = std::shared_ptr<SetExpr>(new SetExpr());
  e->kind_ = Kind::Complement;
  e->left_ = std::move(inner);
  return e;
}

bool SetExpr::member(Int k) const {
  if (k < 1) throw std::invalid_argument("member: k must be >= 1");
  switch (kind_) {
    case Kind::Finite:
      return std::binary_search(elements_.begin(), elements_.end(), k);
    case Kind::Periodic:
      return std::binary_search(elements_.begin(), elements_.end(), k % modulus_);
    case Kind::Blocks:
      return rule_.contains(k);
    case Kind::Union:
      return left_->member(k) || right_->member(k);
    case Kind::Intersection:
      return left_->member(k) && right_->member(k);
    case Kind::Complement:
      return !left_->member(k);
  }
  return false;
}

Int SetExpr::count_prefix(Int n) const {
  if (n < 0) throw std::invalid_argument("count_prefix: n must be >= 0");
  if (n == 0) return 0;
  switch (kind_) {
    case Kind::Finite:
      return std::upper_bound(elements_.begin(), elements_.end(), n) - elements_.begin();
    case Kind::Periodic: {
      Int total = 0;
      for (Int r : elements_) {
        if (r == 0)
          total += n / modulus_;
        else if (n >= r)
          total += (n - r) / modulus_ + 1;
      }
      return total;
    }
    case Kind::Blocks: {
      Int total = 0;
      for (const auto& [a, b] : rule_.blocks_below(n)) total += std::min(b, n) - a + 1;
      return total;
    }
    case Kind::Complement:
      return n - left_->count_prefix(n);
    case Kind::Union:
    case Kind::Intersection: {
      auto bl = left_->bitmap(n);
      auto br = right_->bitmap(n);
      Int total = 0;
      if (kind_ == Kind::Union) {
        for (Int k = 1; k <= n; ++k) total += (bl[k] | br[k]);
      } else {
        for (Int k = 1; k <= n; ++k) total += (bl[k] & br[k]);
      }
      return total;
    }
  }
  return 0;
}

Int SetExpr::count_window(Int n, Int s) const {
  if (s < 1) throw std::invalid_argument("count_window: s must be >= 1");
  if (n < 0) throw std::invalid_argument("count_window: n must be >= 0");
  return count_prefix(n + s) - count_prefix(n);
}

std::vector<std::uint8_t> SetExpr::bitmap(Int n) const {
  std::vector<std::uint8_t> out(std::size_t(n) + 1, 0);
  switch (kind_) {
    case Kind::Finite:
      for (Int e : elements_) {
        if (e > n) break;
        out[std::size_t(e)] = 1;
      }
      break;
    case Kind::Periodic:
      for (Int r : elements_) {
        for (Int k = (r == 0 ? modulus_ : r); k <= n; k += modulus_) out[std::size_t(k)] = 1;
      }
      break;
    case Kind::Blocks:
      for (const auto& [a, b] : rule_.blocks_below(n))
        std::fill(out.begin() + a, out.begin() + std::min(b, n) + 1, std::uint8_t(1));
      break;
    case Kind::Union: {
      out = left_->bitmap(n);
      auto br = right_->bitmap(n);
      for (Int k = 1; k <= n; ++k) out[std::size_t(k)] |= br[std::size_t(k)];
      break;
    }
    case Kind::Intersection: {
      out = left_->bitmap(n);
      auto br = right_->bitmap(n);
      for (Int k = 1; k <= n; ++k) out[std::size_t(k)] &= br[std::size_t(k)];
      break;
    }
    case Kind::Complement: {
      out = left_->bitmap(n);
      for (Int k = 1; k <= n; ++k) out[std::size_t(k)] ^= 1;
      break;
    }
  }
  return out;
}

std::vector<Int> elements_below(const SetExpr& a, Int horizon) {
  auto bm = a.bitmap(horizon);
  std::vector<Int> out;
  for (Int k = 1; k <= horizon; ++k)
    if (bm[std::size_t(k)]) out.push_back(k);
  return out;
}

std::vector<Int> difference_set(const SetExpr& a, Int horizon) {
  if (horizon < 2) throw std::invalid_argument("difference_set: horizon must be >= 2");
  auto elems = elements_below(a, horizon);
  std::vector<Int> gaps;
  for (std::size_t i = 1; i < elems.size(); ++i) gaps.push_back(elems[i] - elems[i - 1]);
  return gaps;
}

namespace {

// Max gap over [0, horizon], counting the leading gap from 0 and the trailing
// gap to the horizon.  Returns nullopt when fewer than 2 elements.
std::optional<Int> max_gap_below(const std::vector<Int>& elems, Int horizon) {
  Int count = 0;
  Int prev = 0;
  Int best = 0;
  for (Int e : elems) {
    if (e > horizon) break;
    best = std::max(best, e - prev);
    prev = e;
    ++count;
  }
  if (count < 2) return std::nullopt;
  best = std::max(best, horizon - prev);
  return best;
}

}  // namespace

SyndeticReport is_syndetic(const SetExpr& a, Int horizon) {
  if (horizon < 2) throw std::invalid_argument("is_syndetic: horizon must be >= 2");
  auto elems = elements_below(a, horizon);
  SyndeticReport rep;
  rep.stats.horizon = horizon;
  rep.stats.element_count = Int(elems.size());
  rep.stats.max_gap = max_gap_below(elems, horizon);
  auto half = max_gap_below(elems, horizon / 2);
  if (!rep.stats.max_gap || !half) {
    rep.syndetic = false;
    rep.half_horizon_max_gap = half.value_or(0);
    return rep;
  }
  rep.half_horizon_max_gap = *half;
  rep.syndetic = *rep.stats.max_gap <= *half;
  return rep;
}

// ---------------------------------------------------------------------------
// Set-spec grammar

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& s) {
  std::size_t pos = 0;
  Int v = 0;
  try {
    v = std::stoll(strip(s), &pos);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + s + "'");
  }
  if (pos != strip(s).size()) throw ParseError("trailing junk in integer '" + s + "'");
  return v;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<Int> parse_int_list(const std::string& braced) {
  std::string s = strip(braced);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("expected {...} list, got '" + braced + "'");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<Int> out;
  if (strip(body).empty()) return out;
  for (const auto& part : split_top_level(body, ',')) out.push_back(parse_int(part));
  return out;
}

std::pair<Int, Int> parse_arg_pair(const std::string& call, const std::string& name) {
  // name(c,r)
  if (call.size() < name.size() + 3 || call.compare(0, name.size(), name) != 0 ||
      call[name.size()] != '(' || call.back() != ')')
    throw ParseError("expected " + name + "(a,b), got '" + call + "'");
  std::string body = call.substr(name.size() + 1, call.size() - name.size() - 2);
  auto parts = split_top_level(body, ',');
  if (parts.size() != 2) throw ParseError("expected two arguments in '" + call + "'");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

BlockRule parse_block_rule(const std::vector<std::string>& parts) {
  if (parts.size() != 3) throw ParseError("blocks spec needs pos= and len= fields");
  BlockRule rule;
  std::string pos = strip(parts[1]);
  if (pos.rfind("pos=", 0) != 0) throw ParseError("expected pos=..., got '" + pos + "'");
  std::string posv = pos.substr(4);
  if (posv.rfind("geom", 0) == 0) {
    rule.pos = BlockRule::Pos::Geometric;
    std::tie(rule.scale, rule.param) = parse_arg_pair(posv, "geom");
  } else if (posv.rfind("poly", 0) == 0) {
    rule.pos = BlockRule::Pos::Polynomial;
    std::tie(rule.scale, rule.param) = parse_arg_pair(posv, "poly");
  } else {
    throw ParseError("unknown position rule '" + posv + "'");
  }
  std::string len = strip(parts[2]);
  if (len.rfind("len=", 0) != 0) throw ParseError("expected len=..., got '" + len + "'");
  std::string lenv = len.substr(4);
  if (lenv == "linear") {
    rule.len = BlockRule::Len::Linear;
  } else if (lenv == "superexp") {
    rule.len = BlockRule::Len::SuperExp;
  } else if (lenv.rfind("const", 0) == 0) {
    rule.len = BlockRule::Len::Constant;
    if (lenv.size() < 7 || lenv[5] != '(' || lenv.back() != ')')
      throw ParseError("expected const(L), got '" + lenv + "'");
    rule.len_const = parse_int(lenv.substr(6, lenv.size() - 7));
  } else {
    throw ParseError("unknown length rule '" + lenv + "'");
  }
  return rule;
}

}  // namespace

SetExprPtr parse_set_spec(const std::string& spec) {
  std::string s = strip(spec);
  if (s.empty()) throw ParseError("empty set spec");

  auto binary_args = [&](const std::string& head) {
    std::string body = s.substr(head.size() + 1, s.size() - head.size() - 2);
    auto parts = split_top_level(body, ',');
    if (parts.size() != 2) throw ParseError(head + " expects two arguments");
    return parts;
  };

  if (s.rfind("union(", 0) == 0 && s.back() == ')') {
    auto parts = binary_args("union");
    return SetExpr::set_union(parse_set_spec(parts[0]), parse_set_spec(parts[1]));
  }
  if (s.rfind("inter(", 0) == 0 && s.back() == ')') {
    auto parts = binary_args("inter");
    return SetExpr::set_intersection(parse_set_spec(parts[0]), parse_set_spec(parts[1]));
  }
  if (s.rfind("compl(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(6, s.size() - 7);
    return SetExpr::complement(parse_set_spec(body));
  }

  auto parts = split_top_level(s, ':');
  const std::string& head = strip(parts[0]);
  if (head == "finite") {
    if (parts.size() != 2) throw ParseError("finite spec: finite:{k1,k2,...}");
    return SetExpr::finite(parse_int_list(parts[1]));
  }
  if (head == "periodic") {
    if (parts.size() != 3) throw ParseError("periodic spec: periodic:m:{r1,...}");
    return SetExpr::periodic(parse_int(parts[1]), parse_int_list(parts[2]));
  }
  if (head == "blocks") {
    try {
      return SetExpr::blocks(parse_block_rule(parts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid block family: ") + e.what());
    }
  }
  throw ParseError("unknown set spec '" + spec + "'");
}

std::string to_spec_string(const SetExpr& a) {
  std::ostringstream os;
  switch (a.kind()) {
    case SetExpr::Kind::Finite: {
      os << "finite:{";
      const auto& es = a.finite_elements();
      for (std::size_t i = 0; i < es.size(); ++i) os << (i ? "," : "") << es[i];
      os << "}";
      break;
    }
    case SetExpr::Kind::Periodic: {
      os << "periodic:" << a.modulus() << ":{";
      const auto& rs = a.residues();
      for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? "," : "") << rs[i];
      os << "}";
      break;
    }
    case SetExpr::Kind::Blocks: {
      const auto& r = a.block_rule();
      os << "blocks:pos=" << (r.pos == BlockRule::Pos::Geometric ? "geom(" : "poly(")
         << r.scale << "," << r.param << "):len=";
      switch (r.len) {
        case BlockRule::Len::Constant: os << "const(" << r.len_const << ")"; break;
        case BlockRule::Len::Linear: os << "linear"; break;
        case BlockRule::Len::SuperExp: os << "superexp"; break;
      }
      break;
    }
    case SetExpr::Kind::Union:
      os << "union(" << to_spec_string(*a.left()) << "," << to_spec_string(*a.right()) << ")";
      break;
    case SetExpr::Kind::Intersection:
      os << "inter(" << to_spec_string(*a.left()) << "," << to_spec_string(*a.right()) << ")";
      break;
    case SetExpr::Kind::Complement:
      os << "compl(" << to_spec_string(*a.left()) << ")";
      break;
  }
  return os.str();
}

}  // namespace chaoscalc::natset
