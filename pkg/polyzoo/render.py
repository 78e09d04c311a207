# render.py ---
#
# Filename: render.py
#
# Commentary:
#
# Rendering of polynomials and of distinguishing reports as plain text or
# LaTeX through jinja2 templates.
#
import os
import logging

import jinja2

from polyzoo.poly import BiPoly


def poly_text(poly, var='k'):
    """Text form of any polynomial; BiPoly always uses x and y."""
    return poly.to_text() if isinstance(poly, BiPoly) else poly.to_text(var)


def poly_latex(poly, var='k'):
    return poly.to_latex() if isinstance(poly, BiPoly) else poly.to_latex(var)


def render_poly(poly, var='k', fmt='text'):
    if fmt == 'latex':
        return poly_latex(poly, var)
    return poly_text(poly, var)


class ReportRenderer:
    """
    Renders reports from the templates shipped in polyzoo/templates.

    Templates ending in .tex.j2 use LaTeX-friendly delimiters
    (\\VAR{...}, \\BLOCK{...}); the others use the jinja2 defaults.
    """

    def __init__(self, template_dir=None):
        """
        Initialize the renderer.

        Args:
            template_dir (str, optional): Custom template directory path.
                                        Defaults to the package's templates directory.
        """
        if template_dir is None:
            template_dir = os.path.join(os.path.dirname(__file__), 'templates')

        self.template_loader = jinja2.FileSystemLoader(searchpath=template_dir)
        self.latex_env = jinja2.Environment(
            loader=self.template_loader,
            block_start_string=r'\BLOCK{',
            block_end_string='}',
            variable_start_string=r'\VAR{',
            variable_end_string='}',
            comment_start_string=r'\#{',
            comment_end_string='}',
            line_statement_prefix='%%',
            line_comment_prefix='%#',
            trim_blocks=True,
            autoescape=False,
        )
        self.text_env = jinja2.Environment(
            loader=self.template_loader,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
            autoescape=False,
        )

    def render_template(self, template_name, **context):
        """
        Render a template with given context.

        Args:
            template_name (str): Name of the template file
            **context: Template variables

        Returns:
            str: Rendered content
        """
        env = self.latex_env if template_name.endswith('.tex.j2') else self.text_env
        template = env.get_template(template_name)
        logging.debug(f"Rendering {template_name}")
        return template.render(**context)

    def report_context(self, report, fmt='text'):
        """Flattens a DistinguishingReport into strings for the templates."""
        var_f, var_g = report.f.var, report.g.var

        def rows(pairs):
            return [{'a': a, 'b': b,
                     'f_a': render_poly(report.values_f[a], var_f, fmt),
                     'f_b': render_poly(report.values_f[b], var_f, fmt),
                     'g_a': render_poly(report.values_g[a], var_g, fmt),
                     'g_b': render_poly(report.values_g[b], var_g, fmt)}
                    for a, b in pairs]

        return {
            'f': str(report.f),
            'g': str(report.g),
            'count': len(report.labels),
            'same_power': report.same_power,
            'blocks_f': report.blocks('f'),
            'blocks_g': report.blocks('g'),
            'only_f': rows(report.only_f),
            'only_g': rows(report.only_g),
        }

    def render_report(self, report, fmt='text'):
        template = 'report.tex.j2' if fmt == 'latex' else 'report.txt.j2'
        return self.render_template(template, **self.report_context(report, fmt))

#
# render.py ends here
