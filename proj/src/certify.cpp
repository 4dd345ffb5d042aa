#include "fpknot/certify.hpp"

namespace fpknot {

namespace {

bool tuple_works(const Presentation& src, const std::vector<Word>& images,
                 const PermRep& target) {
  if (!hom_check(src, images, target).holds) return false;
  return is_surjective(images, target);
}

bool search(const Presentation& src, const PermRep& target, const std::vector<Word>& candidates,
            std::vector<Word>& images, std::size_t at) {
  if (at == src.rank()) return tuple_works(src, images, target);
  for (const Word& w : candidates) {
    images[at] = w;
    if (search(src, target, candidates, images, at + 1)) return true;
  }
  return false;
}

}  // namespace

std::vector<Word> find_surjection(const Presentation& src, const CosetTable& target_table) {
  PermRep target = perm_rep(target_table);
  std::vector<Word> candidates = coset_representatives(target_table);
  std::vector<Word> images(src.rank());
  if (search(src, target, candidates, images, 0)) return images;
  return {};
}

MutualCertificate mutual_surjection_certificate(const Presentation& a, const Presentation& b,
                                                const EnumLimits& limits) {
  MutualCertificate cert;
  EnumOutcome oa = enumerate_cosets(a, {}, limits);
  EnumOutcome ob = enumerate_cosets(b, {}, limits);
  if (oa.overflowed() || ob.overflowed()) return cert;
  if (oa.table->index != ob.table->index) return cert;
  cert.order = oa.table->index;
  if (a.rank() > 3 || b.rank() > 3 || cert.order > 512) return cert;
  cert.forward = find_surjection(a, *ob.table);
  if (cert.forward.empty() && a.rank() > 0) return cert;
  cert.backward = find_surjection(b, *oa.table);
  if (cert.backward.empty() && b.rank() > 0) return cert;
  cert.certified = true;
  return cert;
}

}  // namespace fpknot
