#include "blockscope/scene.hpp"

#include "blockscope/errors.hpp"
#include "blockscope/group_ops.hpp"
#include "blockscope/num_util.hpp"

#include <string>

namespace blockscope {

ActionScene make_scene(std::string name, PermGroup ambient, PermGroup G, PermGroup N,
                       PermGroup P, std::uint64_t p) {
  if (!is_prime(p)) throw domain_error("scene: p must be prime");
  if (!ambient.contains(G) || !ambient.contains(N) || !ambient.contains(P))
    throw domain_error("scene: G, N, P must lie in the ambient group");
  if (!is_normal(ambient, G)) throw domain_error("scene: G is not normal in the ambient group");
  if (!is_normal(ambient, N)) throw domain_error("scene: N is not normal in the ambient group");
  if (!G.contains(N)) throw domain_error("scene: N is not contained in G");
  if (P.order() != p_part(P.order(), p)) throw domain_error("scene: P is not a p-group");
  if ((G.order() / N.order()) % p == 0) throw domain_error("scene: G/N is not a p'-group");
  const std::uint64_t meet = intersection(G, P).order();
  if (G.order() / meet * P.order() != ambient.order())
    throw domain_error("scene: ambient group is not G*P");

  ActionScene scene;
  scene.name = std::move(name);
  scene.ambient = std::move(ambient);
  scene.G = std::move(G);
  scene.N = std::move(N);
  scene.P = std::move(P);
  scene.p = p;
  return scene;
}

} // namespace blockscope
