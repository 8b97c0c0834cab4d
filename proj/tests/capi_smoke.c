/* The public header must compile as plain C. */
#include <stdio.h>
#include <string.h>

#include "vcolor/vcolor.h"

int main(void) {
  const char* text = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
  vc_graph* g = NULL;
  vc_coloring* c = NULL;
  vc_rounding_config cfg;
  uint32_t colors[4];
  int legal = 0;
  size_t used = 0;

  if (vc_graph_parse_dimacs(text, strlen(text), &g, NULL) != VC_OK) return 1;
  vc_rounding_config_default(&cfg);
  if (vc_color_graph(g, &cfg, &c) != VC_OK) {
    fprintf(stderr, "%s\n", vc_last_error());
    return 1;
  }
  vc_coloring_assignment(c, colors);
  vc_verify_coloring(g, colors, 4, &legal, NULL);
  used = vc_coloring_colors_used(c);
  printf("colors=%zu legal=%d\n", used, legal);
  vc_coloring_free(c);
  vc_graph_free(g);
  return legal && used == 2 ? 0 : 1;
}
