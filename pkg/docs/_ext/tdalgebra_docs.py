# tdalgebra docs extension


def setup(app):
    app.add_crossref_type(
        directivename="lawsuite",
        rolename="suite",
        indextemplate="pair: %s; law suite",
    )
    app.add_crossref_type(
        directivename="command",
        rolename="command",
        indextemplate="pair: %s; command",
    )
