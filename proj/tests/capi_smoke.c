#include <stdio.h>
#include <string.h>

#include "fatmark/fatmark.h"

static const char* kG1 =
    "fatgraph v1\n"
    "vertex 0: 0-\n"
    "vertex 1: 4+ 1+ 2+\n"
    "vertex 2: 3- 1- 2-\n"
    "vertex 3: 0+ 3+ 4-\n"
    "tail 0+\n";

int main(void) {
  fm_graph* g = NULL;
  fm_path* p = NULL;
  fm_graph_info info;
  char* total = NULL;
  int zero = 0;
  int failed = 0;

  if (fm_graph_parse(kG1, &g) != FM_OK) {
    fprintf(stderr, "parse: %s\n", fm_last_error());
    return 1;
  }
  if (fm_graph_get_info(g, &info) != FM_OK || info.genus != 1 || info.boundary_number != 1) {
    fprintf(stderr, "unexpected info\n");
    failed = 1;
  }
  if (fm_path_apply(g, "3+,3+", &p) != FM_OK || !fm_path_is_closed(p)) {
    fprintf(stderr, "path: %s\n", fm_last_error());
    failed = 1;
  } else if (fm_path_total(p, 'j', &total, &zero) != FM_OK || !zero || strcmp(total, "0") != 0) {
    fprintf(stderr, "nonzero total\n");
    failed = 1;
  }
  fm_string_free(total);
  fm_path_free(p);
  fm_graph_free(g);
  if (!failed) printf("ok\n");
  return failed;
}
